#include "galrec/curves.hpp"

#include <cmath>

namespace galrec::curves {

using kernels::Interval;
using kernels::Tolerance;

namespace {

// 1 - cos(t) via the half-angle form; keeps tiny drops positive
double versine(double t) {
    double s = std::sin(0.5 * t);
    return 2.0 * s * s;
}

}  // namespace

CycloidSpec::CycloidSpec(double r_) : r(r_) {
    if (!(r > 0.0)) throw DomainError("cycloid radius must be positive");
}

CycloidArea cycloid_area(const CycloidSpec& spec) {
    const double r2 = spec.r * spec.r;
    auto f = [r2](double t) {
        double v = 1.0 - std::cos(t);
        return r2 * v * v;
    };
    CycloidArea out;
    out.numeric = kernels::quad(f, Interval(0.0, 2.0 * M_PI), Tolerance(1e-13, 1e-11));
    out.exact = 3.0 * M_PI * r2;
    return out;
}

DescentCurve DescentCurve::straight(double x_end, double y_end) {
    if (!(y_end < 0.0)) throw GeometryError("descent curve must end below its start");
    if (x_end < 0.0) throw GeometryError("descent curve runs toward positive x");
    DescentCurve c;
    c.kind_ = Kind::straight;
    c.xe_ = x_end;
    c.ye_ = y_end;
    return c;
}

DescentCurve DescentCurve::circular_arc(double x_end, double y_end, double sagitta) {
    if (!(y_end < 0.0) || !(x_end > 0.0))
        throw GeometryError("circular arc needs an endpoint strictly below and ahead");
    if (!(sagitta > 0.0)) throw GeometryError("circular arc requires positive sagitta");
    DescentCurve c;
    c.kind_ = Kind::circular_arc;
    c.xe_ = x_end;
    c.ye_ = y_end;
    const double chord = std::hypot(x_end, y_end);
    const double R = 0.5 * sagitta + chord * chord / (8.0 * sagitta);
    double ux = x_end / chord, uy = y_end / chord;
    double nx = uy, ny = -ux;  // normal pointing to the bulge side (downward)
    if (ny > 0.0) {
        nx = -nx;
        ny = -ny;
    }
    const double mx = 0.5 * x_end, my = 0.5 * y_end;
    c.cx_ = mx - nx * (R - sagitta);
    c.cy_ = my - ny * (R - sagitta);
    c.R_ = R;
    double a0 = std::atan2(-c.cy_, -c.cx_);
    double a1 = std::atan2(y_end - c.cy_, x_end - c.cx_);
    double ab = std::atan2(my + ny * sagitta - c.cy_, mx + nx * sagitta - c.cx_);
    auto mod2pi = [](double a) {
        double m = std::fmod(a, 2.0 * M_PI);
        return m < 0.0 ? m + 2.0 * M_PI : m;
    };
    double fwd = mod2pi(a1 - a0);
    double to_bulge = mod2pi(ab - a0);
    c.a0_ = a0;
    c.sweep_ = to_bulge <= fwd ? fwd : -mod2pi(a0 - a1);
    return c;
}

DescentCurve DescentCurve::cycloid(double x_end, double y_end) {
    if (!(y_end < 0.0) || !(x_end > 0.0))
        throw GeometryError("cycloid needs an endpoint strictly below and ahead");
    const double target = -y_end / x_end;
    // (1 - cos t)/(t - sin t) decreases from +inf to 0 on (0, 2 pi)
    auto shape = [target](double t) { return versine(t) / (t - std::sin(t)) - target; };
    double theta_f = kernels::find_root(shape, Interval(1e-6, 2.0 * M_PI - 1e-12),
                                        Tolerance(1e-13, 1e-13));
    DescentCurve c;
    c.kind_ = Kind::cycloid;
    c.xe_ = x_end;
    c.ye_ = y_end;
    c.theta_f_ = theta_f;
    c.r_ = x_end / (theta_f - std::sin(theta_f));
    return c;
}

std::pair<double, double> DescentCurve::at(double u) const {
    switch (kind_) {
        case Kind::straight: return {u * xe_, u * ye_};
        case Kind::circular_arc: {
            double a = a0_ + u * sweep_;
            return {cx_ + R_ * std::cos(a), cy_ + R_ * std::sin(a)};
        }
        case Kind::cycloid: {
            double t = u * theta_f_;
            return {r_ * (t - std::sin(t)), -r_ * versine(t)};
        }
    }
    return {0.0, 0.0};
}

std::pair<double, double> DescentCurve::velocity(double u) const {
    switch (kind_) {
        case Kind::straight: return {xe_, ye_};
        case Kind::circular_arc: {
            double a = a0_ + u * sweep_;
            return {-R_ * sweep_ * std::sin(a), R_ * sweep_ * std::cos(a)};
        }
        case Kind::cycloid: {
            double t = u * theta_f_;
            return {r_ * theta_f_ * versine(t), -r_ * theta_f_ * std::sin(t)};
        }
    }
    return {0.0, 0.0};
}

std::vector<std::pair<double, double>> DescentCurve::sample(int n) const {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) pts.push_back(at(static_cast<double>(i) / (n - 1)));
    return pts;
}

double descent_time_from(const DescentCurve& curve, double u_start, const PhysicalConstants& c) {
    if (!(u_start >= 0.0 && u_start < 1.0)) throw DomainError("release point must lie in [0,1)");
    const double y_release = curve.at(u_start).second;
    auto integrand = [&](double u) {
        auto [vx, vy] = curve.velocity(u);
        double drop = y_release - curve.at(u).second;
        return std::hypot(vx, vy) / std::sqrt(2.0 * c.g * drop);
    };
    return kernels::quad(integrand, Interval(u_start, 1.0), Tolerance(1e-12, 1e-9));
}

double descent_time(const DescentCurve& curve, const PhysicalConstants& c) {
    return descent_time_from(curve, 0.0, c);
}

double descent_time_partial(const DescentCurve& curve, double u_to, const PhysicalConstants& c) {
    if (!(u_to >= 0.0 && u_to <= 1.0)) throw DomainError("parameter must lie in [0,1]");
    if (u_to == 0.0) return 0.0;
    auto integrand = [&](double u) {
        auto [vx, vy] = curve.velocity(u);
        double drop = -curve.at(u).second;
        return std::hypot(vx, vy) / std::sqrt(2.0 * c.g * drop);
    };
    return kernels::quad(integrand, Interval(0.0, u_to), Tolerance(1e-12, 1e-9));
}

BrachistochroneReport brachistochrone_compare(double x_end, double y_end,
                                              const PhysicalConstants& c) {
    BrachistochroneReport rep;
    rep.t_straight = descent_time(DescentCurve::straight(x_end, y_end), c);
    rep.t_cycloid = descent_time(DescentCurve::cycloid(x_end, y_end), c);

    const double chord = std::hypot(x_end, y_end);
    auto time_at = [&](double sagitta) {
        return descent_time(DescentCurve::circular_arc(x_end, y_end, sagitta), c);
    };
    // coarse scan to bracket the minimum, then root of the derivative
    const int n_scan = 48;
    double best_h = 0.0, best_t = rep.t_straight;
    double h_lo = 0.02 * chord, h_hi = 1.5 * chord;
    for (int i = 0; i <= n_scan; ++i) {
        double h = h_lo + (h_hi - h_lo) * static_cast<double>(i) / n_scan;
        double t = time_at(h);
        if (t < best_t) {
            best_t = t;
            best_h = h;
        }
    }
    double step = (h_hi - h_lo) / n_scan;
    double lo = std::max(h_lo, best_h - step);
    double hi = std::min(h_hi, best_h + step);
    const double dh = 1e-6 * chord;
    auto dtime = [&](double h) { return (time_at(h + dh) - time_at(h - dh)) / (2.0 * dh); };
    if (dtime(lo) < 0.0 && dtime(hi) > 0.0) {
        best_h = kernels::find_root(dtime, Interval(lo, hi), Tolerance(1e-9 * chord, 0.0));
        best_t = time_at(best_h);
    }
    rep.best_sagitta = best_h;
    rep.t_best_circular_arc = best_t;
    return rep;
}

HangingChain::HangingChain(double span_, double arc_length_) : span(span_), arc_length(arc_length_) {
    if (!(span > 0.0)) throw DomainError("chain span must be positive");
    if (!(arc_length > span)) throw DomainError("chain has no sag: arc length must exceed span");
}

CatenaryComparison catenary_vs_parabola(const HangingChain& chain, int samples) {
    const double S = chain.span;
    const double L = chain.arc_length;

    // catenary y = a cosh(x/a): arc length 2 a sinh(S / 2a) = L
    auto cat_gap = [&](double sigma) { return std::sinh(sigma) / sigma - L / S; };
    double sigma = kernels::find_root(cat_gap, Interval(1e-9, 60.0), Tolerance(1e-14, 1e-13));
    const double a = S / (2.0 * sigma);

    // parabola y = q x^2 of the same span and arc length
    auto par_arc = [&](double q) {
        double k = q * S;
        return 0.5 * S * std::sqrt(1.0 + k * k) + 0.5 / q * std::asinh(k);
    };
    auto par_gap = [&](double q) { return par_arc(q) - L; };
    double q = kernels::find_root(par_gap, Interval(1e-12 / S, 1e5 / S),
                                  Tolerance(1e-15 / S, 1e-13));

    CatenaryComparison out;
    out.catenary_a = a;
    out.parabola_coeff = q;
    out.sag = a * (std::cosh(0.5 * S / a) - 1.0);

    const double y_cat_end = a * std::cosh(0.5 * S / a);
    const double y_par_end = q * 0.25 * S * S;
    out.max_deviation = 0.0;
    out.samples.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        double x = -0.5 * S + S * static_cast<double>(i) / (samples - 1);
        double yc = a * std::cosh(x / a) - y_cat_end;
        double yp = q * x * x - y_par_end;
        out.samples.push_back({x, {yc, yp}});
        out.max_deviation = std::max(out.max_deviation, std::fabs(yc - yp));
    }
    out.deviation_over_sag = out.max_deviation / out.sag;
    return out;
}

}  // namespace galrec::curves
