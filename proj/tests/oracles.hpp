#pragma once

// Independent oracles used by the test suites, kept separate from the
// library code paths they check.

#include <cmath>
#include <functional>
#include <stdexcept>

namespace oracles {

/// Complete elliptic integral of the first kind via the arithmetic-geometric
/// mean: K(k) = pi / (2 agm(1, sqrt(1 - k^2))).
inline double elliptic_k(double k) {
    double a = 1.0;
    double b = std::sqrt(1.0 - k * k);
    for (int i = 0; i < 64 && std::fabs(a - b) > 1e-17 * a; ++i) {
        double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return M_PI / (2.0 * a);
}

/// Exact pendulum period from the elliptic integral.
inline double pendulum_period_elliptic(double length, double amplitude, double g) {
    return 4.0 * std::sqrt(length / g) * elliptic_k(std::sin(0.5 * amplitude));
}

// ---- potential-energy scan for the floating paraboloid ---------------------
//
// The body z = r^2/(4f), 0 <= z <= H, tilts by theta; the draft is re-solved
// numerically so the displaced volume keeps the body afloat, and the energy
// is the height of the center of gravity over the center of buoyancy in the
// water frame. Upright is stable exactly when the energy rises with tilt.

namespace detail {

struct Submerged {
    double volume;
    double x_centroid;  // body frame
    double z_centroid;  // body frame
};

// numeric polar integration over the waterline disc of the plane cut
// z <= c + m x of the paraboloid z >= (x^2+y^2)/(4f)
inline Submerged submerged_part(double f, double c, double m) {
    double rho2 = 4.0 * f * (c + f * m * m);
    if (rho2 <= 0.0) return {0.0, 0.0, 0.0};
    double rho = std::sqrt(rho2);
    const double cx = 2.0 * f * m;
    const int nr = 64, na = 64;
    double V = 0.0, Sx = 0.0, Sz = 0.0;
    auto wsimp = [](int i, int n) { return i == 0 || i == n ? 1.0 : (i % 2 ? 4.0 : 2.0); };
    for (int i = 0; i <= nr; ++i) {
        double r = rho * i / nr;
        double wr = wsimp(i, nr);
        for (int j = 0; j <= na; ++j) {
            double phi = 2.0 * M_PI * j / na;
            double wa = wsimp(j, na);
            double x = cx + r * std::cos(phi);
            double y = r * std::sin(phi);
            double z_top = c + m * x;
            double z_bot = (x * x + y * y) / (4.0 * f);
            double h = z_top - z_bot;
            if (h < 0.0) h = 0.0;
            double w = wr * wa * r;
            V += w * h;
            Sx += w * x * h;
            Sz += w * 0.5 * (z_top * z_top - z_bot * z_bot) * (h > 0.0 ? 1.0 : 0.0);
        }
    }
    double scale = (rho / nr / 3.0) * (2.0 * M_PI / na / 3.0);
    V *= scale;
    Sx *= scale;
    Sz *= scale;
    if (V <= 0.0) return {0.0, 0.0, 0.0};
    return {V, Sx / V, Sz / V};
}

inline double solve_draft(double f, double m, double target_volume, double h_max) {
    double lo = 1e-9, hi = 1.5 * h_max;
    auto vol = [&](double c) { return submerged_part(f, c, m).volume - target_volume; };
    double flo = vol(lo), fhi = vol(hi);
    if (flo * fhi > 0.0) throw std::runtime_error("draft bracket failed");
    for (int i = 0; i < 200 && hi - lo > 1e-12 * h_max; ++i) {
        double mid = 0.5 * (lo + hi);
        double fm = vol(mid);
        if (flo * fm <= 0.0) {
            hi = mid;
            fhi = fm;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

struct EnergyScanResult {
    bool stable;
    double tilt_used;  // rad
};

inline EnergyScanResult paraboloid_energy_scan(double f, double H, double s) {
    // full-body volume and centroid, numerically (plane far above the rim,
    // level cut at the top handled by capping)
    const double V_total = 2.0 * M_PI * f * H * H;  // checked against quadrature below
    detail::Submerged full = detail::submerged_part(f, H, 0.0);
    if (std::fabs(full.volume - V_total) > 1e-6 * V_total)
        throw std::runtime_error("paraboloid volume quadrature off");
    const double zg = full.z_centroid;
    const double target = s * V_total;

    auto energy = [&](double theta) {
        double m = std::tan(theta);
        double c = detail::solve_draft(f, m, target, H);
        // keep the waterline inside the body
        double rho = std::sqrt(4.0 * f * (c + f * m * m));
        double z_rim = c + m * (2.0 * f * m + rho);
        if (z_rim > H) return std::nan("");
        detail::Submerged sub = detail::submerged_part(f, c, m);
        // height of G above B in the water frame; the common offset cancels
        return std::cos(theta) * (zg - sub.z_centroid) + std::sin(theta) * sub.x_centroid;
    };

    double theta_hi = 5.0 * M_PI / 180.0;
    double e_hi = energy(theta_hi);
    while (std::isnan(e_hi) && theta_hi > 1e-4) {
        theta_hi *= 0.5;
        e_hi = energy(theta_hi);
    }
    if (std::isnan(e_hi)) throw std::runtime_error("no admissible tilt for the energy scan");
    double e0 = energy(0.0);
    double e_lo = energy(0.5 * theta_hi);
    EnergyScanResult res;
    res.tilt_used = theta_hi;
    res.stable = (e_hi > e0) && (e_lo > e0);
    return res;
}

}  // namespace oracles
