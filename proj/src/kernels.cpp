#include "galrec/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace galrec::kernels {

Tolerance::Tolerance(double abs_, double rel_) : abs(abs_), rel(rel_) {
    if (abs < 0.0 || rel < 0.0) throw DomainError("tolerance parts must be non-negative");
    if (abs == 0.0 && rel == 0.0) throw DomainError("tolerance must not be zero in both parts");
}

double Tolerance::margin(double scale) const { return abs + rel * std::fabs(scale); }

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!(lo <= hi)) throw DomainError("interval requires lo <= hi");
}

namespace {

constexpr int kMaxSimpsonDepth = 48;

struct QuadStatus {
    double worst_residual = 0.0;
    bool exhausted = false;
};

// Evaluate f, nudging inward when the value at an interval endpoint is not
// finite. The nudge scale follows the interval so transformed integrands with
// a removable 0*inf limit evaluate to the limit.
double eval_guarded(const RealFn& f, double x, double lo, double hi) {
    double v = f(x);
    if (std::isfinite(v)) return v;
    double span = hi - lo;
    double delta = span * 1e-8;
    if (x <= lo) return f(lo + delta);
    if (x >= hi) return f(hi - delta);
    return f(x + delta);
}

double simpson_panel(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const RealFn& f, double a, double b, double fa, double fm, double fb,
                        double whole, double eps, int depth, QuadStatus& status) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    double flm = f(lm);
    double frm = f(rm);
    if (!std::isfinite(flm)) flm = eval_guarded(f, lm, a, m);
    if (!std::isfinite(frm)) frm = eval_guarded(f, rm, m, b);
    double left = simpson_panel(a, m, fa, flm, fm);
    double right = simpson_panel(m, b, fm, frm, fb);
    double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * eps || depth <= 0) {
        if (depth <= 0 && std::fabs(delta) > 15.0 * eps) {
            status.exhausted = true;
            status.worst_residual = std::max(status.worst_residual, std::fabs(delta) / 15.0);
        }
        return left + right + delta / 15.0;
    }
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1, status) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1, status);
}

double quad_on(const RealFn& f, double a, double b, double eps, QuadStatus& status);

// Integrate over [a, m] after x = a + t^2, which removes integrable
// endpoint singularities at a (1/sqrt exactly, weaker ones approximately).
double quad_left_substituted(const RealFn& f, double a, double m, double eps, QuadStatus& status) {
    double tmax = std::sqrt(m - a);
    auto g = [&](double t) { return 2.0 * t * f(a + t * t); };
    return quad_on(g, 0.0, tmax, eps, status);
}

double quad_on(const RealFn& f, double a, double b, double eps, QuadStatus& status) {
    if (a == b) return 0.0;
    double fa = f(a);
    double fb = f(b);
    if (!std::isfinite(fa)) {
        double m = 0.5 * (a + b);
        double fm2 = f(m);
        if (!std::isfinite(fm2)) throw DomainError("integrand not finite in interval interior");
        return quad_left_substituted(f, a, m, 0.5 * eps, status) +
               quad_on(f, m, b, 0.5 * eps, status);
    }
    if (!std::isfinite(fb)) {
        double m = 0.5 * (a + b);
        auto mirrored = [&](double x) { return f(a + b - x); };
        double fm2 = f(m);
        if (!std::isfinite(fm2)) throw DomainError("integrand not finite in interval interior");
        return quad_on(f, a, m, 0.5 * eps, status) +
               quad_left_substituted(mirrored, a, m, 0.5 * eps, status);
    }
    double m = 0.5 * (a + b);
    double fm = eval_guarded(f, m, a, b);
    double whole = simpson_panel(a, b, fa, fm, fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, eps, kMaxSimpsonDepth, status);
}

}  // namespace

double quad(const RealFn& f, Interval iv, Tolerance tol) {
    if (iv.width() == 0.0) return 0.0;
    QuadStatus status;
    // First pass with the absolute part only to size the relative part.
    double eps0 = tol.abs > 0.0 ? tol.abs : tol.rel;
    double est = quad_on(f, iv.lo, iv.hi, eps0, status);
    double eps = tol.margin(est);
    if (eps > eps0 * 1.0001) {
        QuadStatus relaxed;
        est = quad_on(f, iv.lo, iv.hi, eps, relaxed);
        status = relaxed;
    }
    if (status.exhausted && status.worst_residual > eps) {
        throw ConvergenceError("quadrature did not converge", est, status.worst_residual);
    }
    return est;
}

State rk4_step(const Derivative& f, double t, const State& y, double h) {
    const std::size_t n = y.size();
    State k1 = f(t, y);
    State tmp(n);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
    State k2 = f(t + 0.5 * h, tmp);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
    State k3 = f(t + 0.5 * h, tmp);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
    State k4 = f(t + h, tmp);
    State out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

namespace {

Trajectory rk4_run(const State& y0, const Derivative& f, Interval span, std::size_t steps,
                   std::size_t max_samples) {
    Trajectory traj;
    std::size_t stride = std::max<std::size_t>(1, steps / max_samples);
    double h = span.width() / static_cast<double>(steps);
    State y = y0;
    double t = span.lo;
    traj.times.push_back(t);
    traj.states.push_back(y);
    for (std::size_t i = 0; i < steps; ++i) {
        State next = rk4_step(f, t, y, h);
        for (double v : next) {
            if (!std::isfinite(v))
                throw SingularityError("integration step produced non-finite state", t, y);
        }
        y = std::move(next);
        t = span.lo + static_cast<double>(i + 1) * h;
        if ((i + 1) % stride == 0 || i + 1 == steps) {
            traj.times.push_back(t);
            traj.states.push_back(y);
        }
    }
    return traj;
}

}  // namespace

Trajectory integrate_ode(const State& state0, const Derivative& f, Interval t_span,
                         Tolerance tol, std::size_t max_samples) {
    if (t_span.width() <= 0.0) throw DomainError("t_span must be non-degenerate");
    constexpr std::size_t kMaxSteps = std::size_t{1} << 22;
    std::size_t steps = 256;
    Trajectory prev = rk4_run(state0, f, t_span, steps, max_samples);
    while (steps < kMaxSteps) {
        steps *= 2;
        Trajectory fine = rk4_run(state0, f, t_span, steps, max_samples);
        bool ok = true;
        const State& a = prev.final_state();
        const State& b = fine.final_state();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (std::fabs(a[i] - b[i]) > tol.margin(b[i])) {
                ok = false;
                break;
            }
        }
        if (ok) return fine;
        prev = std::move(fine);
    }
    double resid = 0.0;
    throw ConvergenceError("ode step-doubling did not converge",
                           prev.final_state().empty() ? 0.0 : prev.final_state()[0], resid);
}

double find_root(const RealFn& f, Interval bracket, Tolerance tol) {
    double lo = bracket.lo;
    double hi = bracket.hi;
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0) throw BracketError("find_root: no sign change over bracket");
    for (int it = 0; it < 400; ++it) {
        double mid = 0.5 * (lo + hi);
        if (hi - lo <= tol.margin(mid)) return mid;
        // secant candidate from the bracket endpoints, clamped to the interior
        double x = mid;
        double denom = fhi - flo;
        if (denom != 0.0) {
            double sec = lo - flo * (hi - lo) / denom;
            double guard = 0.01 * (hi - lo);
            if (sec > lo + guard && sec < hi - guard) x = sec;
        }
        double fx = f(x);
        if (fx == 0.0) return x;
        if (flo * fx < 0.0) {
            hi = x;
            fhi = fx;
        } else {
            lo = x;
            flo = fx;
        }
    }
    return 0.5 * (lo + hi);
}

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("normal_quantile requires p in (0,1)");
    // Acklam's rational approximation
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    double q, x;
    if (p < plow) {
        q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - plow) {
        q = p - 0.5;
        double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    // one Halley step against the exact cdf
    double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
    double u = e * std::sqrt(2.0 * M_PI) * std::exp(0.5 * x * x);
    x = x - u / (1.0 + 0.5 * x * u);
    return x;
}

double mean_ci(double sigma, long n, double confidence) {
    if (!(sigma > 0.0)) throw DomainError("mean_ci requires sigma > 0");
    if (n < 1) throw DomainError("mean_ci requires n >= 1");
    if (!(confidence > 0.0 && confidence < 1.0))
        throw DomainError("mean_ci requires confidence in (0,1)");
    double z = normal_quantile(0.5 + 0.5 * confidence);
    return z * sigma / std::sqrt(static_cast<double>(n));
}

}  // namespace galrec::kernels
