#pragma once

#include <utility>
#include <vector>

#include "galrec/kernels.hpp"
#include "galrec/kinematics.hpp"

namespace galrec::curves {

using kinematics::PhysicalConstants;

struct CycloidSpec {
    double r;  // generating-circle radius
    explicit CycloidSpec(double r_);
};

struct CycloidArea {
    double numeric;  // quadrature of r^2 (1 - cos t)^2 over one arch
    double exact;    // 3 pi r^2
};

CycloidArea cycloid_area(const CycloidSpec& spec);

/// Frictionless descent curve between two endpoints, start above end.
class DescentCurve {
  public:
    enum class Kind { straight, circular_arc, cycloid };

    static DescentCurve straight(double x_end, double y_end);
    /// Circle through the endpoints, bulging below the chord by the sagitta.
    static DescentCurve circular_arc(double x_end, double y_end, double sagitta);
    /// Single-arch cycloid through both endpoints, released at the cusp.
    static DescentCurve cycloid(double x_end, double y_end);

    Kind kind() const { return kind_; }
    std::pair<double, double> at(double u) const;  // u in [0, 1]
    std::pair<double, double> velocity(double u) const;
    double cycloid_radius() const { return r_; }
    double cycloid_angle() const { return theta_f_; }
    std::vector<std::pair<double, double>> sample(int n) const;

  private:
    Kind kind_ = Kind::straight;
    double xe_ = 0.0, ye_ = 0.0;
    double r_ = 0.0, theta_f_ = 0.0;              // cycloid
    double cx_ = 0.0, cy_ = 0.0, R_ = 0.0;        // circle center and radius
    double a0_ = 0.0, sweep_ = 0.0;               // circle arc range
};

/// Time of frictionless descent from rest at the upper endpoint,
/// by quadrature with endpoint-singularity handling.
double descent_time(const DescentCurve& curve, const PhysicalConstants& c);

/// Descent time from an interior release point (tautochrone checks).
double descent_time_from(const DescentCurve& curve, double u_start, const PhysicalConstants& c);

/// Time to pass the given parameter after release at the top.
double descent_time_partial(const DescentCurve& curve, double u_to, const PhysicalConstants& c);

struct BrachistochroneReport {
    double t_cycloid;
    double t_best_circular_arc;
    double best_sagitta;
    double t_straight;
};

BrachistochroneReport brachistochrone_compare(double x_end, double y_end,
                                              const PhysicalConstants& c);

struct HangingChain {
    double span;
    double arc_length;
    HangingChain(double span_, double arc_length_);
};

struct CatenaryComparison {
    double catenary_a;        // y = a cosh(x/a)
    double parabola_coeff;    // y = coeff x^2, matched span and arc length
    double sag;               // catenary sag
    double max_deviation;     // max vertical separation of the two fits
    double deviation_over_sag;
    std::vector<std::pair<double, std::pair<double, double>>> samples;  // x, (y_cat, y_par)
};

CatenaryComparison catenary_vs_parabola(const HangingChain& chain, int samples = 1024);

}  // namespace galrec::curves
