#include "galrec/kinematics.hpp"

#include <algorithm>
#include <cmath>

namespace galrec::kinematics {

using kernels::Interval;
using kernels::Tolerance;

void PhysicalConstants::validate() const {
    const double vals[] = {g, G, M_sun, M_earth, R_earth, AU, sidereal_day,
                           lunar_sidereal_month, moon_distance};
    for (double v : vals)
        if (!(v > 0.0)) throw DomainError("physical constants must be strictly positive");
}

double fall_distance(double t, const PhysicalConstants& c) {
    if (t < 0.0) throw DomainError("fall_distance requires t >= 0");
    return 0.5 * c.g * t * t;
}

double fall_velocity(double t, const PhysicalConstants& c) {
    if (t < 0.0) throw DomainError("fall_velocity requires t >= 0");
    return c.g * t;
}

MotionProfile MotionProfile::uniform(double speed, double duration) {
    if (!(duration > 0.0)) throw DomainError("profile duration must be positive");
    if (speed < 0.0) throw DomainError("profile speed must be non-negative");
    MotionProfile p;
    p.kind_ = Kind::uniform;
    p.param_ = speed;
    p.duration_ = duration;
    return p;
}

MotionProfile MotionProfile::linear(double rate, double duration) {
    if (!(duration > 0.0)) throw DomainError("profile duration must be positive");
    if (rate < 0.0) throw DomainError("profile rate must be non-negative");
    MotionProfile p;
    p.kind_ = Kind::linear;
    p.param_ = rate;
    p.duration_ = duration;
    return p;
}

MotionProfile MotionProfile::sampled(std::vector<double> times, std::vector<double> speeds) {
    if (times.size() != speeds.size() || times.size() < 2)
        throw DomainError("sampled profile needs matching times/speeds, at least two");
    if (times.front() != 0.0) throw DomainError("sampled times must start at 0");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1])) throw DomainError("sampled times must strictly increase");
    for (double v : speeds)
        if (v < 0.0) throw DomainError("speeds must be non-negative");
    MotionProfile p;
    p.kind_ = Kind::sampled;
    p.duration_ = times.back();
    p.times_ = std::move(times);
    p.speeds_ = std::move(speeds);
    return p;
}

double MotionProfile::speed_at(double t) const {
    t = std::clamp(t, 0.0, duration_);
    switch (kind_) {
        case Kind::uniform: return param_;
        case Kind::linear: return param_ * t;
        case Kind::sampled: {
            auto it = std::upper_bound(times_.begin(), times_.end(), t);
            if (it == times_.begin()) return speeds_.front();
            if (it == times_.end()) return speeds_.back();
            std::size_t i = static_cast<std::size_t>(it - times_.begin());
            double u = (t - times_[i - 1]) / (times_[i] - times_[i - 1]);
            return speeds_[i - 1] + u * (speeds_[i] - speeds_[i - 1]);
        }
    }
    return 0.0;
}

bool MotionProfile::monotone_speed() const {
    if (kind_ != Kind::sampled) return true;
    for (std::size_t i = 1; i < speeds_.size(); ++i)
        if (speeds_[i] < speeds_[i - 1] - 1e-12 * std::fabs(speeds_[i - 1])) return false;
    return true;
}

double mean_speed_distance(const MotionProfile& profile) {
    return kernels::quad([&](double t) { return profile.speed_at(t); },
                         Interval(0.0, profile.duration()), Tolerance(1e-14, 1e-12));
}

namespace {

// Time at which a monotone profile reaches the given speed.
double time_at_speed(const MotionProfile& p, double v) {
    double v0 = p.speed_at(0.0);
    double vf = p.final_speed();
    if (v <= v0) return 0.0;
    if (v >= vf) return p.duration();
    return kernels::find_root([&](double t) { return p.speed_at(t) - v; },
                              Interval(0.0, p.duration()),
                              Tolerance(1e-13 * p.duration(), 0.0));
}

}  // namespace

MatchingAudit matching_audit(const MotionProfile& a, const MotionProfile& b, MatchingRule rule) {
    MatchingAudit audit;
    const int n = 201;
    bool matched = true;
    if (rule == MatchingRule::equal_vertical_drop) {
        if (!a.monotone_speed() || !b.monotone_speed())
            throw MatchingError("equal-vertical-drop matching requires monotone speeds");
        for (int i = 0; i <= n; ++i) {
            double u = static_cast<double>(i) / n;
            double va = a.speed_at(time_at_speed(a, u * a.final_speed()));
            double vb = b.speed_at(time_at_speed(b, u * b.final_speed()));
            double scale = std::max(std::fabs(va), std::fabs(vb));
            if (std::fabs(va - vb) > 1e-9 * std::max(scale, 1e-300)) {
                matched = false;
                break;
            }
        }
    } else {
        for (int i = 0; i <= n; ++i) {
            double u = static_cast<double>(i) / n;
            double va = a.speed_at(u * a.duration());
            double vb = b.speed_at(u * b.duration());
            double scale = std::max(std::fabs(va), std::fabs(vb));
            if (std::fabs(va - vb) > 1e-9 * std::max(scale, 1e-300)) {
                matched = false;
                break;
            }
        }
    }
    audit.speeds_matched = matched;
    double da = mean_speed_distance(a);
    double db = mean_speed_distance(b);
    audit.distances = {da, db};
    audit.distance_ratio = db / da;
    audit.time_ratio = b.duration() / a.duration();
    audit.galilean_inference_holds =
        std::fabs(audit.distance_ratio - audit.time_ratio) <= 1e-6 * std::fabs(audit.time_ratio);
    return audit;
}

RampPath RampPath::straight(double length, double drop) {
    if (!(length > 0.0) || !(drop > 0.0) || drop > length + 1e-15)
        throw DomainError("straight ramp requires 0 < drop <= length");
    RampPath r;
    r.kind_ = Kind::straight;
    r.length_ = length;
    r.drop_ = drop;
    return r;
}

RampPath RampPath::vertical(double drop) { return straight(drop, drop); }

RampPath RampPath::quarter_circle(double radius) {
    if (!(radius > 0.0)) throw DomainError("radius must be positive");
    RampPath r;
    r.kind_ = Kind::quarter_circle;
    r.radius_ = radius;
    r.length_ = 0.5 * M_PI * radius;
    r.drop_ = radius;
    return r;
}

RampPath RampPath::polyline(std::vector<std::pair<double, double>> points) {
    if (points.size() < 2) throw DomainError("polyline needs at least two points");
    RampPath r;
    r.kind_ = Kind::polyline;
    r.cum_s_.push_back(0.0);
    for (std::size_t i = 1; i < points.size(); ++i) {
        double dx = points[i].first - points[i - 1].first;
        double dy = points[i].second - points[i - 1].second;
        if (dy > 1e-15) throw DomainError("polyline must be non-increasing in y");
        r.cum_s_.push_back(r.cum_s_.back() + std::hypot(dx, dy));
    }
    r.length_ = r.cum_s_.back();
    r.drop_ = points.front().second - points.back().second;
    if (!(r.drop_ > 0.0)) throw DomainError("ramp must end below its start");
    r.pts_ = std::move(points);
    return r;
}

double RampPath::total_drop() const { return drop_; }

double RampPath::drop_at(double s) const {
    s = std::clamp(s, 0.0, length_);
    switch (kind_) {
        case Kind::straight: return drop_ * s / length_;
        case Kind::quarter_circle: return radius_ * std::sin(s / radius_);
        case Kind::polyline: {
            auto it = std::upper_bound(cum_s_.begin(), cum_s_.end(), s);
            if (it == cum_s_.begin()) return 0.0;
            if (it == cum_s_.end()) return drop_;
            std::size_t i = static_cast<std::size_t>(it - cum_s_.begin());
            double u = (s - cum_s_[i - 1]) / (cum_s_[i] - cum_s_[i - 1]);
            double y = pts_[i - 1].second + u * (pts_[i].second - pts_[i - 1].second);
            return pts_.front().second - y;
        }
    }
    return 0.0;
}

double ramp_descent_time(const RampPath& path, const PhysicalConstants& c) {
    const double L = path.length();
    // a flat initial stretch never gets the mass moving
    if (!(path.drop_at(1e-6 * L) > 0.0))
        throw NonStartingError("ramp is flat at the start");
    auto integrand = [&](double s) {
        double drop = path.drop_at(s);
        return 1.0 / std::sqrt(2.0 * c.g * drop);
    };
    return kernels::quad(integrand, Interval(0.0, L), Tolerance(1e-12, 1e-10));
}

MotionProfile ramp_profile(const RampPath& path, const PhysicalConstants& c, int samples) {
    // v(s) = sqrt(2 g drop(s)); timestamps from the same descent-time integral
    std::vector<double> times, speeds;
    times.reserve(samples);
    speeds.reserve(samples);
    double L = path.length();
    times.push_back(0.0);
    speeds.push_back(0.0);
    auto integrand = [&](double s) { return 1.0 / std::sqrt(2.0 * c.g * path.drop_at(s)); };
    double t_acc = 0.0;
    double s_prev = 0.0;
    for (int i = 1; i < samples; ++i) {
        double s = L * static_cast<double>(i) / (samples - 1);
        t_acc += kernels::quad(integrand, Interval(s_prev, s), Tolerance(1e-13, 1e-11));
        times.push_back(t_acc);
        speeds.push_back(std::sqrt(2.0 * c.g * path.drop_at(s)));
        s_prev = s;
    }
    return MotionProfile::sampled(std::move(times), std::move(speeds));
}

double pendulum_period(double length, double amplitude, const PhysicalConstants& c) {
    if (!(length > 0.0)) throw DomainError("pendulum length must be positive");
    if (!(amplitude > 0.0 && amplitude < M_PI))
        throw DomainError("pendulum amplitude must lie in (0, pi)");
    const double w2 = c.g / length;
    kernels::Derivative rhs = [w2](double, const kernels::State& y) {
        return kernels::State{y[1], -w2 * std::sin(y[0])};
    };
    const double t_small = 2.0 * M_PI * std::sqrt(length / c.g);
    const double h = t_small / 4096.0;
    kernels::State y{amplitude, 0.0};
    double t = 0.0;
    double t_prev = 0.0;
    kernels::State y_prev = y;
    const double t_cap = 100.0 * t_small;
    while (y[0] > 0.0) {
        t_prev = t;
        y_prev = y;
        y = kernels::rk4_step(rhs, t, y, h);
        t += h;
        if (t > t_cap) throw ConvergenceError("pendulum crossing not found", t, amplitude);
    }
    // refine the crossing by re-integrating from the bracketing state
    auto theta_at = [&](double tq) {
        int sub = 64;
        double hh = (tq - t_prev) / sub;
        kernels::State z = y_prev;
        double tz = t_prev;
        for (int i = 0; i < sub; ++i) {
            z = kernels::rk4_step(rhs, tz, z, hh);
            tz += hh;
        }
        return z[0];
    };
    double t_cross = kernels::find_root(theta_at, Interval(t_prev, t),
                                        Tolerance(1e-12 * t_small, 0.0));
    return 4.0 * t_cross;
}

ProjectileResult projectile_trajectory(double v0, double angle, ProjectileModel model,
                                       const PhysicalConstants& c, double deceleration) {
    if (!(v0 > 0.0)) throw DomainError("projectile speed must be positive");
    if (!(angle > -M_PI / 2.0 && angle <= M_PI / 2.0))
        throw DomainError("projectile angle must lie in (-pi/2, pi/2]");
    double ux = std::cos(angle);
    double uy = std::sin(angle);
    double rho = model == ProjectileModel::incline_deceleration ? deceleration : 0.0;
    // position = u * (v0 t - rho t^2 / 2) + (0, -g t^2 / 2)
    auto pos = [&](double t) {
        double along = v0 * t - 0.5 * rho * t * t;
        return std::pair<double, double>{ux * along, uy * along - 0.5 * c.g * t * t};
    };
    double tf = uy > 0.0 ? 2.0 * v0 * uy / (uy * rho + c.g) : v0 / c.g;
    ProjectileResult out;
    const int n = 33;
    for (int i = 0; i <= n; ++i) out.points.push_back(pos(tf * i / n));

    // quadratic fit of x(t), y(t); exact for both models by construction,
    // the residual is the parabola detector
    double bx = -0.5 * rho * ux;
    double by = -0.5 * rho * uy - 0.5 * c.g;
    double resid = 0.0, scale = 0.0;
    for (int i = 0; i <= n; ++i) {
        double t = tf * i / n;
        auto [x, y] = out.points[static_cast<std::size_t>(i)];
        double px = v0 * ux * t + bx * t * t;
        double py = v0 * uy * t + by * t * t;
        resid = std::max({resid, std::fabs(x - px), std::fabs(y - py)});
        scale = std::max({scale, std::fabs(x), std::fabs(y)});
    }
    out.is_parabola = scale > 0.0 && resid <= 1e-9 * scale && (bx != 0.0 || by != 0.0);
    out.axis_tilt = std::atan(bx / by);
    out.range = uy > 0.0 ? ux * (v0 * tf - 0.5 * rho * tf * tf) : 0.0;
    // apex where vertical velocity vanishes
    double t_apex = v0 * uy / (uy * rho + c.g);
    out.apex_horizontal_speed = ux * (v0 - rho * t_apex);
    return out;
}

std::vector<RangeRow> range_table(double v0, const std::vector<double>& angles,
                                  const PhysicalConstants& c) {
    std::vector<RangeRow> rows;
    rows.reserve(angles.size());
    for (double a : angles) {
        if (!(a > 0.0 && a < M_PI / 2.0))
            throw DomainError("range table angles must lie in (0, pi/2)");
        rows.push_back({a, v0 * v0 * std::sin(2.0 * a) / c.g});
    }
    return rows;
}

}  // namespace galrec::kinematics
