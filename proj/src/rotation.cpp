#include "galrec/rotation.hpp"

#include <cmath>
#include <limits>

namespace galrec::rotation {

using kernels::Interval;
using kernels::Tolerance;

RotatingBody::RotatingBody(double radius_, double surface_speed_, double gravity_)
    : radius(radius_), surface_speed(surface_speed_), gravity(gravity_) {
    if (!(radius > 0.0)) throw DomainError("rotating body needs positive radius");
    if (surface_speed < 0.0 || surface_speed >= 1e7)
        throw DomainError("surface speed out of range [0, 1e7)");
    if (!(gravity > 0.0)) throw DomainError("gravity must be positive");
}

RotatingBody RotatingBody::earth() { return RotatingBody(6.371e6, 465.1, 9.8); }

RotatingBody RotatingBody::earth_spun(double factor) {
    RotatingBody e = earth();
    return RotatingBody(e.radius, e.surface_speed * factor, e.gravity);
}

double tangential_rise(double t, const RotatingBody& body) {
    const double R = body.radius;
    const double vt = body.surface_speed * t;
    if (vt >= R) throw DomainError("tangential geometry invalid: V*t >= R");
    // R - sqrt(R^2 - (Vt)^2) without cancellation
    return vt * vt / (R + std::sqrt((R - vt) * (R + vt)));
}

double extrusion_limit_ratio(const RotatingBody& body) {
    if (body.surface_speed == 0.0) return std::numeric_limits<double>::infinity();
    return body.gravity * body.radius / (body.surface_speed * body.surface_speed);
}

ExtrusionVerdict extrusion_verdict(const RotatingBody& body) {
    double ratio = extrusion_limit_ratio(body);
    ExtrusionVerdict v;
    v.limit_ratio = ratio;
    v.critical_speed = std::sqrt(body.gravity * body.radius);
    // the boundary case V = sqrt(gR) is classified retained
    v.extruded = ratio < 1.0;
    return v;
}

FallPath path_of_fall(const FallPathSpec& spec, double theta_max, int samples) {
    if (!(spec.r0 > 0.0) || !(spec.omega > 0.0) || !(spec.g > 0.0))
        throw DomainError("fall path spec must be strictly positive");
    if (!(theta_max > 0.0)) throw DomainError("theta_max must be positive");

    FallPath path;
    path.spiral_coefficient = spec.g / (2.0 * spec.omega * spec.omega);
    const double theta_zero = spec.omega * std::sqrt(2.0 * spec.r0 / spec.g);
    path.truncated = theta_zero < theta_max;
    path.theta_end = path.truncated ? theta_zero : theta_max;

    // radial fall integrated independently of the closed form it is checked against
    const double t_end = path.theta_end / spec.omega;
    kernels::Derivative radial = [&](double, const kernels::State& y) {
        return kernels::State{y[1], -spec.g};
    };
    kernels::Trajectory traj = kernels::integrate_ode(
        {spec.r0, 0.0}, radial, Interval(0.0, t_end),
        Tolerance(1e-12 * spec.r0, 1e-12), static_cast<std::size_t>(samples) * 4);

    path.theta.reserve(samples);
    path.r.reserve(samples);
    path.spiral_dev = 0.0;
    path.semicircle_dev = 0.0;
    std::size_t k = 0;
    for (int i = 0; i < samples; ++i) {
        double th = path.theta_end * static_cast<double>(i) / (samples - 1);
        double t = th / spec.omega;
        while (k + 1 < traj.times.size() && traj.times[k + 1] <= t) ++k;
        double r;
        if (k + 1 < traj.times.size() && traj.times[k + 1] > traj.times[k]) {
            double u = (t - traj.times[k]) / (traj.times[k + 1] - traj.times[k]);
            // cubic Hermite from stored radial state (position + velocity)
            double r0s = traj.states[k][0], v0s = traj.states[k][1];
            double r1s = traj.states[k + 1][0], v1s = traj.states[k + 1][1];
            double dt = traj.times[k + 1] - traj.times[k];
            double h00 = (1 + 2 * u) * (1 - u) * (1 - u);
            double h10 = u * (1 - u) * (1 - u);
            double h01 = u * u * (3 - 2 * u);
            double h11 = u * u * (u - 1);
            r = h00 * r0s + h10 * dt * v0s + h01 * r1s + h11 * dt * v1s;
        } else {
            r = traj.states[k][0];
        }
        if (r < 0.0) r = 0.0;
        path.theta.push_back(th);
        path.r.push_back(r);
        double spiral = spec.r0 - path.spiral_coefficient * th * th;
        if (spiral < 0.0) spiral = 0.0;
        double semicircle = th < M_PI / 2.0 ? spec.r0 * std::cos(th) : 0.0;
        path.spiral_dev = std::max(path.spiral_dev, std::fabs(r - spiral));
        path.semicircle_dev = std::max(path.semicircle_dev, std::fabs(r - semicircle));
    }
    return path;
}

}  // namespace galrec::rotation
