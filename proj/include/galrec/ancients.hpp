#pragma once

#include <cstdint>
#include <vector>

#include "galrec/kernels.hpp"

namespace galrec::ancients {

/// Sun-moon distance ratio from the elongation at half moon, right-triangle
/// dichotomy geometry. Unbounded as the angle approaches a right angle.
double sun_moon_distance_ratio(double angle);

struct DichotomyCi {
    double sigma_degrees;   // timing scatter converted at half a degree per hour
    double half_width;      // degrees
    bool detectable;        // true when the stated bias exceeds the half-width
};

/// Averaging argument: many crude half-moon timings bound the elongation.
DichotomyCi dichotomy_ci(double sigma_hours, long observations_per_year, long years,
                         double confidence, double true_angle_deg = 89.853,
                         double claimed_angle_deg = 87.0);

double volume_ratio_from_diameter(double d_ratio);
double diameter_ratio_from_volume(double v_ratio);

/// Little Schroeder numbers by the three-term recurrence; exact integers,
/// n capped where 64-bit arithmetic holds with headroom.
std::int64_t schroeder_count(int n);

/// Exhaustive generation of plane trees with no unary nodes over n ordered
/// leaves; the independent oracle for small n (supported to n = 9).
std::int64_t schroeder_brute_force(int n);

std::vector<std::pair<int, std::int64_t>> schroeder_table(int n_max = 12);

}  // namespace galrec::ancients
