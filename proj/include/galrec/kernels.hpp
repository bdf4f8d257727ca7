#pragma once

#include <functional>
#include <vector>

#include "galrec/errors.hpp"

namespace galrec::kernels {

/// Mixed absolute/relative tolerance. At least one part must be nonzero.
struct Tolerance {
    double abs = 0.0;
    double rel = 0.0;
    Tolerance(double abs_, double rel_);
    /// Allowed deviation for a quantity of the given magnitude.
    double margin(double scale) const;
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    Interval(double lo_, double hi_);
    double width() const { return hi - lo; }
};

using RealFn = std::function<double(double)>;

/// Adaptive Simpson quadrature with interval splitting.
///
/// Endpoint singularities of integrable type (1/sqrt and weaker) are handled
/// by the substitution x = a + t^2 on the offending half, applied when the
/// integrand is non-finite at an endpoint.
double quad(const RealFn& f, Interval iv, Tolerance tol);

using State = std::vector<double>;
using Derivative = std::function<State(double, const State&)>;

struct Trajectory {
    std::vector<double> times;
    std::vector<State> states;
    const State& final_state() const { return states.back(); }
    double final_time() const { return times.back(); }
};

/// Classic fixed-step fourth-order integrator with step-doubling control:
/// the step count doubles until two consecutive runs agree within tol.
/// Fully deterministic for fixed inputs.
Trajectory integrate_ode(const State& state0, const Derivative& f, Interval t_span,
                         Tolerance tol, std::size_t max_samples = 4096);

/// One classic fourth-order step (exposed for event refinement in callers).
State rk4_step(const Derivative& f, double t, const State& y, double h);

/// Bisection-then-secant hybrid. Requires f(lo)*f(hi) <= 0.
double find_root(const RealFn& f, Interval bracket, Tolerance tol);

/// Standard normal quantile, rational approximation (Acklam) plus one
/// Halley refinement; accurate far beyond the 1e-6 contract.
double normal_quantile(double p);

/// Half-width of the confidence interval of a mean of n observations with
/// per-observation standard deviation sigma.
double mean_ci(double sigma, long n, double confidence);

}  // namespace galrec::kernels
