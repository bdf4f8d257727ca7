#pragma once

#include <string>
#include <utility>
#include <vector>

#include "galrec/kernels.hpp"

namespace galrec::kinematics {

/// Single source of truth for every claim. Overridable via configuration,
/// never mutated mid-run (passed by value into the operations).
struct PhysicalConstants {
    double g = 9.8;                      // m/s^2
    double G = 6.674e-11;                // m^3/(kg s^2)
    double M_sun = 1.989e30;             // kg
    double M_earth = 5.972e24;           // kg
    double R_earth = 6.371e6;            // m
    double AU = 1.496e11;                // m
    double sidereal_day = 86164.0;       // s
    double lunar_sidereal_month = 27.32; // day
    double moon_distance = 3.844e8;      // m
    void validate() const;
};

double fall_distance(double t, const PhysicalConstants& c);
double fall_velocity(double t, const PhysicalConstants& c);

/// Velocity-vs-time record: the substrate of the matching-technique auditor.
class MotionProfile {
  public:
    static MotionProfile uniform(double speed, double duration);
    static MotionProfile linear(double rate, double duration);  // v = rate * t
    static MotionProfile sampled(std::vector<double> times, std::vector<double> speeds);

    double duration() const { return duration_; }
    double speed_at(double t) const;
    double final_speed() const { return speed_at(duration_); }
    bool monotone_speed() const;

  private:
    enum class Kind { uniform, linear, sampled };
    Kind kind_ = Kind::uniform;
    double param_ = 0.0;  // speed (uniform) or rate (linear)
    double duration_ = 0.0;
    std::vector<double> times_, speeds_;
};

/// Distance covered by a profile, as the quadrature of its speed.
double mean_speed_distance(const MotionProfile& profile);

enum class MatchingRule {
    equal_time_fraction,  // pair states at equal fractions of elapsed time
    equal_vertical_drop,  // pair states of equal speed (equal drop on frictionless paths)
};

struct MatchingAudit {
    bool speeds_matched = false;
    std::pair<double, double> distances;
    double distance_ratio = 0.0;
    double time_ratio = 0.0;
    bool galilean_inference_holds = false;  // distance ratio == time ratio
};

/// Audits the one-to-one "degrees of speed" pairing between two motions and
/// tests (never asserts) the inference from matched speeds to proportional
/// distances.
MatchingAudit matching_audit(const MotionProfile& a, const MotionProfile& b, MatchingRule rule);

/// Descending planar path by arc length; sliding point mass, no friction.
class RampPath {
  public:
    static RampPath straight(double length, double drop);
    static RampPath vertical(double drop);
    /// Quarter circle released where the tangent is vertical.
    static RampPath quarter_circle(double radius);
    static RampPath polyline(std::vector<std::pair<double, double>> points);

    double length() const { return length_; }
    double total_drop() const;
    double drop_at(double s) const;

  private:
    enum class Kind { straight, quarter_circle, polyline };
    Kind kind_ = Kind::straight;
    double length_ = 0.0;
    double drop_ = 0.0;
    double radius_ = 0.0;
    std::vector<std::pair<double, double>> pts_;
    std::vector<double> cum_s_;
};

double ramp_descent_time(const RampPath& path, const PhysicalConstants& c);

/// Speed-vs-time profile of a frictionless ramp descent, for the auditor.
MotionProfile ramp_profile(const RampPath& path, const PhysicalConstants& c, int samples = 257);

/// Full-swing period from the equation of motion (no small-angle shortcut).
double pendulum_period(double length, double amplitude, const PhysicalConstants& c);

struct ProjectileResult {
    std::vector<std::pair<double, double>> points;
    bool is_parabola = false;
    double axis_tilt = 0.0;  // radians from upright; 0 means an upright parabola
    double range = 0.0;      // horizontal distance at return to launch height
    double apex_horizontal_speed = 0.0;
};

enum class ProjectileModel { inertial_composition, incline_deceleration };

ProjectileResult projectile_trajectory(double v0, double angle, ProjectileModel model,
                                       const PhysicalConstants& c, double deceleration = 0.0);

struct RangeRow {
    double angle;
    double range;
};

std::vector<RangeRow> range_table(double v0, const std::vector<double>& angles,
                                  const PhysicalConstants& c);

}  // namespace galrec::kinematics
