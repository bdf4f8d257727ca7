#pragma once

#include <string>
#include <vector>

#include "galrec/kernels.hpp"
#include "galrec/kinematics.hpp"

namespace galrec::celestial {

using kinematics::PhysicalConstants;

struct OrbitSpec {
    double radius;  // m
    double period;  // s
    OrbitSpec(double radius_, double period_);
    double speed() const;  // 2 pi r / T
    double mu() const;     // gravitational parameter implied by the circular orbit
};

struct NamedOrbit {
    std::string name;
    OrbitSpec orbit;
};

struct PlanetEntry {
    std::string name;
    double radius_au;
    double period_days;
};

/// Standard modern radii and sidereal periods, Mercury through Saturn.
std::vector<PlanetEntry> default_planets();

std::vector<NamedOrbit> planetary_orbits(const std::vector<PlanetEntry>& table,
                                         const PhysicalConstants& c);

enum class FallModel { constant_g, inverse_square };

struct PisanDropRow {
    std::string name;
    double orbit_radius;
    double speed;
    double drop_radius;  // altitude from which the fall yields the orbital speed
};

struct PisanDropResult {
    std::vector<PisanDropRow> rows;
    double spread;  // (max - min) / min of the drop radii
    bool common_point;
};

/// Altitude each planet would have to fall from to acquire its orbital speed.
/// Inverse-square uses each orbit's own gravitational parameter unless
/// mu_override is positive.
PisanDropResult pisan_drop_altitudes(const std::vector<NamedOrbit>& orbits, FallModel model,
                                     const PhysicalConstants& c, double mu_override = 0.0);

/// Time for the moon, robbed of its orbital speed, to fall to the earth.
double moon_fall_time(FallModel model, const PhysicalConstants& c);

/// Gravitational parameter implied by the moon's orbit (used by the fall).
double moon_orbit_mu(const PhysicalConstants& c);

/// Time to fall from rest at r0 to the given radius under the degenerate
/// Kepler ellipse (closed form).
double radial_fall_time_to(double r0, double r, double mu);

double circular_orbit_speed(double radius, double mu);

struct TideSeries {
    double extremum_interval;  // s between consecutive high and low water
    int maxima_per_period;
    std::vector<std::pair<double, double>> series;  // (t, forcing)
};

TideSeries tide_period_lunisolar(double lunar_day_seconds);
TideSeries tide_period_torus(const OrbitSpec& orbit, double rotation_period);

struct ParallaxDistance {
    double small_angle;  // baseline / threshold
    double exact;        // baseline / (2 tan(threshold/2))
};

ParallaxDistance parallax_min_distance(double threshold, double baseline);
double parallax_ratio_to(const ParallaxDistance& d, const OrbitSpec& orbit);

struct StarPair {
    double near_distance;    // in units of the earth-sun distance
    double far_distance;     // same units
    double intrinsic_offset; // rad, sky-plane offset between the lines of sight
    StarPair(double near_, double far_, double intrinsic_offset_);
};

struct SwingSample {
    double day;
    double separation;     // rad
    double position_angle; // rad
    double dx, dy;         // relative offset components, rad
};

struct SwingResult {
    std::vector<SwingSample> series;
    double differential_amplitude;  // 1/near - 1/far
    double peak_swing;              // largest displacement of the relative offset
};

/// Apparent relative motion of a double star from the earth's orbital
/// displacement, small-angle vector parallax.
SwingResult double_star_swing(const StarPair& pair, const std::vector<double>& days,
                              double year_days = 365.25);

struct SolarAxis {
    double tilt;            // rad (default 7 deg 15 min)
    double node_longitude;  // ecliptic longitude where tracks run straight
    SolarAxis(double tilt_ = 0.1265364, double node_longitude_ = 0.0);
};

enum class TrackShape { U, arch, diagonal, straight };

struct SunspotTrack {
    std::vector<std::pair<double, double>> points;  // sky plane, disc radius = 1
    TrackShape shape;
    double slope;
    double curvature;            // second derivative of the quadratic fit
    double sub_earth_latitude;   // rad
};

const char* track_shape_name(TrackShape s);

/// Projected disc track of a spot over one transit, classified by the
/// quadratic-fit curvature and slope.
SunspotTrack sunspot_path(const SolarAxis& axis, double day_of_year, double spot_latitude,
                          double year_days = 365.25);

}  // namespace galrec::celestial
