#include "galrec/celestial.hpp"

#include <algorithm>
#include <cmath>

namespace galrec::celestial {

using kernels::Interval;
using kernels::Tolerance;

OrbitSpec::OrbitSpec(double radius_, double period_) : radius(radius_), period(period_) {
    if (!(radius > 0.0) || !(period > 0.0))
        throw DomainError("orbit radius and period must be positive");
}

double OrbitSpec::speed() const { return 2.0 * M_PI * radius / period; }

double OrbitSpec::mu() const {
    double v = speed();
    return v * v * radius;
}

std::vector<PlanetEntry> default_planets() {
    return {
        {"mercury", 0.387098, 87.969},
        {"venus", 0.723332, 224.701},
        {"earth", 1.0, 365.256},
        {"mars", 1.523679, 686.980},
        {"jupiter", 5.2044, 4332.589},
        {"saturn", 9.5826, 10759.22},
    };
}

std::vector<NamedOrbit> planetary_orbits(const std::vector<PlanetEntry>& table,
                                         const PhysicalConstants& c) {
    std::vector<NamedOrbit> orbits;
    orbits.reserve(table.size());
    for (const auto& p : table)
        orbits.push_back({p.name, OrbitSpec(p.radius_au * c.AU, p.period_days * 86400.0)});
    return orbits;
}

PisanDropResult pisan_drop_altitudes(const std::vector<NamedOrbit>& orbits, FallModel model,
                                     const PhysicalConstants& c, double mu_override) {
    if (orbits.empty()) throw DomainError("pisan drop needs at least one orbit");
    PisanDropResult res;
    res.rows.reserve(orbits.size());
    for (const auto& [name, orbit] : orbits) {
        double v = orbit.speed();
        double drop_radius;
        if (model == FallModel::constant_g) {
            drop_radius = orbit.radius + v * v / (2.0 * c.g);
        } else {
            double mu = mu_override > 0.0 ? mu_override : orbit.mu();
            // v^2 = 2 mu (1/r - 1/R*)
            double inv = 1.0 / orbit.radius - v * v / (2.0 * mu);
            if (!(inv > 0.0))
                throw UnreachableAltitudeError("orbital speed at or above escape speed for " +
                                               name);
            drop_radius = 1.0 / inv;
        }
        res.rows.push_back({name, orbit.radius, v, drop_radius});
    }
    double lo = res.rows.front().drop_radius, hi = lo;
    for (const auto& r : res.rows) {
        lo = std::min(lo, r.drop_radius);
        hi = std::max(hi, r.drop_radius);
    }
    res.spread = (hi - lo) / lo;
    res.common_point = res.spread <= 0.01;
    return res;
}

double moon_orbit_mu(const PhysicalConstants& c) {
    double period = c.lunar_sidereal_month * 86400.0;
    double d = c.moon_distance;
    return 4.0 * M_PI * M_PI * d * d * d / (period * period);
}

double moon_fall_time(FallModel model, const PhysicalConstants& c) {
    const double d = c.moon_distance;
    if (model == FallModel::constant_g) return std::sqrt(2.0 * d / c.g);
    const double a = 0.5 * d;
    return M_PI * std::sqrt(a * a * a / moon_orbit_mu(c));
}

double radial_fall_time_to(double r0, double r, double mu) {
    if (!(r0 > 0.0) || r < 0.0 || r > r0) throw DomainError("requires 0 <= r <= r0");
    const double a = 0.5 * r0;
    // r = a (1 + cos eta), t = sqrt(a^3/mu) (eta + sin eta)
    double cos_eta = r / a - 1.0;
    double eta = std::acos(std::clamp(cos_eta, -1.0, 1.0));
    return std::sqrt(a * a * a / mu) * (eta + std::sin(eta));
}

double circular_orbit_speed(double radius, double mu) {
    if (!(radius > 0.0) || !(mu > 0.0)) throw DomainError("radius and mu must be positive");
    return std::sqrt(mu / radius);
}

namespace {

TideSeries extrema_spacing(const std::function<double(double)>& forcing, double period,
                           int maxima_expected_hint) {
    (void)maxima_expected_hint;
    TideSeries out;
    const int n = 4096;
    double dt = period / n;
    std::vector<double> extrema;
    auto deriv = [&](double t) { return (forcing(t + 1e-6 * period) - forcing(t - 1e-6 * period)); };
    double prev = deriv(0.5 * dt);
    for (int i = 1; i < 2 * n; ++i) {
        double t = (i + 0.5) * dt;
        double cur = deriv(t);
        if (prev == 0.0) prev = cur;
        if (prev * cur < 0.0) {
            double root = kernels::find_root(deriv, Interval(t - dt, t),
                                             Tolerance(1e-9 * period, 0.0));
            extrema.push_back(root);
        }
        prev = cur;
    }
    if (extrema.size() < 2) throw ConvergenceError("no tide extrema located", 0.0, 0.0);
    double spacing = 0.0;
    for (std::size_t i = 1; i < extrema.size(); ++i) spacing += extrema[i] - extrema[i - 1];
    spacing /= static_cast<double>(extrema.size() - 1);
    out.extremum_interval = spacing;
    // count maxima within one forcing period
    int maxima = 0;
    for (double e : extrema) {
        if (e >= period) break;
        if (forcing(e) > forcing(e - 1e-4 * period) && forcing(e) > forcing(e + 1e-4 * period))
            ++maxima;
    }
    out.maxima_per_period = maxima;
    const int m = 512;
    out.series.reserve(m);
    for (int i = 0; i < m; ++i) {
        double t = period * static_cast<double>(i) / (m - 1);
        out.series.push_back({t, forcing(t)});
    }
    return out;
}

}  // namespace

TideSeries tide_period_lunisolar(double lunar_day_seconds) {
    if (!(lunar_day_seconds > 0.0)) throw DomainError("lunar day must be positive");
    // two bulges per revolution
    auto forcing = [lunar_day_seconds](double t) {
        return std::cos(4.0 * M_PI * t / lunar_day_seconds);
    };
    return extrema_spacing(forcing, lunar_day_seconds, 2);
}

TideSeries tide_period_torus(const OrbitSpec& orbit, double rotation_period) {
    if (!(rotation_period > 0.0)) throw DomainError("rotation period must be positive");
    double v_orb = orbit.speed();
    double v_rot = 0.1 * v_orb;  // amplitude does not move the extrema
    auto forcing = [=](double t) {
        return v_orb + v_rot * std::cos(2.0 * M_PI * t / rotation_period);
    };
    return extrema_spacing(forcing, rotation_period, 1);
}

ParallaxDistance parallax_min_distance(double threshold, double baseline) {
    if (!(threshold > 0.0)) throw DomainError("parallax threshold must be positive");
    if (!(baseline > 0.0)) throw DomainError("baseline must be positive");
    ParallaxDistance d;
    d.small_angle = baseline / threshold;
    d.exact = baseline / (2.0 * std::tan(0.5 * threshold));
    return d;
}

double parallax_ratio_to(const ParallaxDistance& d, const OrbitSpec& orbit) {
    return d.small_angle / orbit.radius;
}

StarPair::StarPair(double near_, double far_, double intrinsic_offset_)
    : near_distance(near_), far_distance(far_), intrinsic_offset(intrinsic_offset_) {
    if (!(near_distance > 0.0) || !(far_distance >= near_distance))
        throw DomainError("star pair requires 0 < near <= far");
}

SwingResult double_star_swing(const StarPair& pair, const std::vector<double>& days,
                              double year_days) {
    SwingResult res;
    res.differential_amplitude = 1.0 / pair.near_distance - 1.0 / pair.far_distance;
    res.series.reserve(days.size());
    std::vector<std::pair<double, double>> rel;
    rel.reserve(days.size());
    for (double day : days) {
        double lam = 2.0 * M_PI * day / year_days;
        double ex = std::cos(lam), ey = std::sin(lam);
        // apparent offset of each star: intrinsic direction minus the
        // parallactic shift (earth position over distance)
        double dx = pair.intrinsic_offset + ex * res.differential_amplitude;
        double dy = ey * res.differential_amplitude;
        rel.push_back({dx, dy});
        SwingSample s;
        s.day = day;
        s.dx = dx;
        s.dy = dy;
        s.separation = std::hypot(dx, dy);
        s.position_angle = std::atan2(dy, dx);
        res.series.push_back(s);
    }
    double peak = 0.0;
    for (std::size_t i = 0; i < rel.size(); ++i)
        for (std::size_t j = i + 1; j < rel.size(); ++j)
            peak = std::max(peak, std::hypot(rel[i].first - rel[j].first,
                                             rel[i].second - rel[j].second));
    res.peak_swing = peak;
    return res;
}

SolarAxis::SolarAxis(double tilt_, double node_longitude_)
    : tilt(tilt_), node_longitude(node_longitude_) {
    if (!(tilt >= 0.0 && tilt < M_PI / 2.0)) throw DomainError("axis tilt must lie in [0, pi/2)");
}

const char* track_shape_name(TrackShape s) {
    switch (s) {
        case TrackShape::U: return "U";
        case TrackShape::arch: return "arch";
        case TrackShape::diagonal: return "diagonal";
        case TrackShape::straight: return "straight";
    }
    return "?";
}

SunspotTrack sunspot_path(const SolarAxis& axis, double day_of_year, double spot_latitude,
                          double year_days) {
    if (!(std::fabs(spot_latitude) < M_PI / 2.0))
        throw DomainError("spot latitude must lie in (-pi/2, pi/2)");
    const double tau = axis.tilt;
    const double ln = axis.node_longitude;
    // rotation axis chosen so the sub-earth latitude vanishes at the node
    const double nx = std::sin(tau) * std::sin(ln);
    const double ny = -std::sin(tau) * std::cos(ln);
    const double nz = std::cos(tau);
    // basis perpendicular to the axis
    const double ax = std::cos(ln), ay = std::sin(ln), az = 0.0;
    const double bx = ny * az - nz * ay;
    const double by = nz * ax - nx * az;
    const double bz = nx * ay - ny * ax;

    const double lam = 2.0 * M_PI * day_of_year / year_days;
    const double ex = std::cos(lam), ey = std::sin(lam), ez = 0.0;
    // sky basis: in-ecliptic transverse direction and the ecliptic pole
    const double sx_x = -std::sin(lam), sx_y = std::cos(lam), sx_z = 0.0;

    const double sphi = std::sin(spot_latitude), cphi = std::cos(spot_latitude);
    const double n_dot_e = nx * ex + ny * ey + nz * ez;
    const double a_dot_e = ax * ex + ay * ey + az * ez;
    const double b_dot_e = bx * ex + by * ey + bz * ez;

    SunspotTrack track;
    track.sub_earth_latitude = std::asin(std::clamp(n_dot_e, -1.0, 1.0));

    // visibility of the spot circle: p.e = A + Rc cos(chi - chi0)
    const double A = sphi * n_dot_e;
    const double Rc = cphi * std::hypot(a_dot_e, b_dot_e);
    if (A + Rc <= 0.0) throw VisibilityError("spot never faces the observer");
    const double chi0 = std::atan2(b_dot_e, a_dot_e);
    double half_window;
    if (A - Rc >= 0.0) {
        half_window = M_PI;  // never sets; one full turn is the track
    } else {
        half_window = std::acos(std::clamp(-A / Rc, -1.0, 1.0));
    }
    // trim the limbs where foreshortening dominates
    const double w = 0.92 * half_window;

    const int n = 201;
    track.points.reserve(n);
    double sxx = 0, sx2 = 0, sx3 = 0, sx4 = 0, sy = 0, sxy = 0, sx2y = 0;
    for (int i = 0; i < n; ++i) {
        double chi = chi0 - w + 2.0 * w * static_cast<double>(i) / (n - 1);
        double px = sphi * nx + cphi * (std::cos(chi) * ax + std::sin(chi) * bx);
        double py = sphi * ny + cphi * (std::cos(chi) * ay + std::sin(chi) * by);
        double pz = sphi * nz + cphi * (std::cos(chi) * az + std::sin(chi) * bz);
        double x = px * sx_x + py * sx_y + pz * sx_z;
        double y = pz;  // sky-north component (ecliptic pole)
        track.points.push_back({x, y});
        sxx += x;
        sx2 += x * x;
        sx3 += x * x * x;
        sx4 += x * x * x * x;
        sy += y;
        sxy += x * y;
        sx2y += x * x * y;
    }
    // least squares y = c0 + c1 x + c2 x^2, normal equations by elimination
    double m00 = n, m01 = sxx, m02 = sx2;
    double m11 = sx2, m12 = sx3, m22 = sx4;
    double r0 = sy, r1 = sxy, r2 = sx2y;
    double a11 = m11 - m01 * m01 / m00, a12 = m12 - m01 * m02 / m00;
    double a21 = m12 - m02 * m01 / m00, a22 = m22 - m02 * m02 / m00;
    double b1 = r1 - m01 / m00 * r0;
    double b2 = r2 - m02 / m00 * r0;
    double det = a11 * a22 - a12 * a21;
    double c1 = (b1 * a22 - a12 * b2) / det;
    double c2 = (a11 * b2 - b1 * a21) / det;

    track.slope = c1;
    track.curvature = 2.0 * c2;
    const double curve_small = 0.02;  // in units of the disc radius
    const double slope_diag = 0.05;
    if (std::fabs(track.curvature) >= curve_small) {
        track.shape = track.curvature > 0.0 ? TrackShape::U : TrackShape::arch;
    } else if (std::fabs(track.slope) > slope_diag) {
        track.shape = TrackShape::diagonal;
    } else {
        track.shape = TrackShape::straight;
    }
    return track;
}

}  // namespace galrec::celestial
