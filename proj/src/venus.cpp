#include "galrec/venus.hpp"

#include <cmath>

namespace galrec::venus {

using kernels::Interval;
using kernels::Tolerance;

void PhaseModel::validate() const {
    if (!(r_venus > 0.0 && r_venus < r_earth))
        throw DomainError("phase model requires 0 < r_venus < r_earth");
    if (!(T_venus > 0.0 && T_earth > 0.0)) throw DomainError("orbital periods must be positive");
}

double PhaseModel::synodic_period() const { return 1.0 / (1.0 / T_venus - 1.0 / T_earth); }

namespace {

// phase geometry of the sun-venus-earth triangle at separation angle psi
struct Geometry {
    double distance;
    double cos_alpha;
    double cos_elongation;
};

Geometry triangle(const PhaseModel& m, double cos_psi) {
    Geometry g;
    double d2 = m.r_earth * m.r_earth + m.r_venus * m.r_venus -
                2.0 * m.r_earth * m.r_venus * cos_psi;
    g.distance = std::sqrt(d2);
    g.cos_alpha = (m.r_venus * m.r_venus + d2 - m.r_earth * m.r_earth) /
                  (2.0 * m.r_venus * g.distance);
    g.cos_elongation = (m.r_earth * m.r_earth + d2 - m.r_venus * m.r_venus) /
                       (2.0 * m.r_earth * g.distance);
    return g;
}

double clamp1(double x) { return x < -1.0 ? -1.0 : (x > 1.0 ? 1.0 : x); }

}  // namespace

double PhaseModel::separation_at(double date_offset) const {
    // dichotomy: cos(psi) = r_venus / r_earth, approached from larger psi
    double psi_anchor = std::acos(r_venus / r_earth);
    double sigma = 2.0 * M_PI / synodic_period();
    // signed lead of venus over earth; negative before inferior conjunction
    double delta = -psi_anchor + sigma * date_offset;
    double m = std::remainder(delta, 2.0 * M_PI);
    return std::fabs(m);
}

double PhaseModel::inferior_conjunction_offset() const {
    double psi_anchor = std::acos(r_venus / r_earth);
    return psi_anchor / (2.0 * M_PI / synodic_period());
}

PhaseSample sample_at(const PhaseModel& model, double date_offset) {
    model.validate();
    double psi = model.separation_at(date_offset);
    Geometry g = triangle(model, std::cos(psi));
    Geometry anchor = triangle(model, model.r_venus / model.r_earth);
    PhaseSample s;
    s.date_offset = date_offset;
    s.phase_angle = std::acos(clamp1(g.cos_alpha));
    s.k = 0.5 * (1.0 + g.cos_alpha);
    s.diameter_ratio = anchor.distance / g.distance;
    s.elongation = std::acos(clamp1(g.cos_elongation));
    return s;
}

std::vector<PhaseSample> simulate(const PhaseModel& model, const std::vector<double>& dates) {
    std::vector<PhaseSample> out;
    out.reserve(dates.size());
    for (double d : dates) out.push_back(sample_at(model, d));
    return out;
}

std::vector<double> panel_dates() {
    std::vector<double> dates;
    for (int i = -5; i <= 3; ++i) dates.push_back(21.0 * i);
    return dates;
}

NonlinearityProfile nonlinearity_profile(const PhaseModel& model, double k_hi, double k_mid,
                                         double k_lo) {
    model.validate();
    // scan the branch from superior conjunction down to inferior conjunction
    double t_inferior = model.inferior_conjunction_offset();
    double t_superior = t_inferior - 0.5 * model.synodic_period();
    auto k_at = [&](double t) { return sample_at(model, t).k; };
    auto crossing = [&](double threshold) {
        double a = t_superior + 1e-9 * model.synodic_period();
        double b = t_inferior - 1e-9 * model.synodic_period();
        if ((k_at(a) - threshold) * (k_at(b) - threshold) > 0.0)
            throw WindowError("phase threshold not crossed on the scanned branch");
        return kernels::find_root([&](double t) { return k_at(t) - threshold; }, Interval(a, b),
                                  Tolerance(1e-10 * model.synodic_period(), 0.0));
    };
    NonlinearityProfile prof;
    double t_hi = crossing(k_hi);
    double t_mid = k_mid == k_hi ? t_hi : crossing(k_mid);
    double t_lo = k_lo == k_mid ? t_mid : crossing(k_lo);
    prof.days_gibbous_to_near_half = t_mid - t_hi;
    prof.days_lingering_near_half = t_lo - t_mid;
    return prof;
}

TabletopReport tabletop_equivalence(const PhaseModel& model, double lamp_distance,
                                    double orbit_radius) {
    if (!(lamp_distance > 0.0) || !(orbit_radius > 0.0))
        throw DomainError("bench lengths must be positive");
    model.validate();
    TabletopReport rep;
    rep.scale_ratio = lamp_distance / orbit_radius;
    rep.expected_ratio = model.r_venus / model.r_earth;
    rep.scale_valid =
        std::fabs(rep.scale_ratio - rep.expected_ratio) <= 1e-2 * rep.expected_ratio;

    // bench model: same geometry with the bench radii
    PhaseModel bench;
    bench.r_venus = lamp_distance;
    bench.r_earth = orbit_radius;
    bench.T_venus = model.T_venus;
    bench.T_earth = model.T_earth;

    rep.max_phase_mismatch = 0.0;
    for (double d : panel_dates()) {
        // protractor angle taken from the simulated date
        double psi = model.separation_at(d);
        Geometry g = triangle(bench, std::cos(psi));
        double k_bench = 0.5 * (1.0 + g.cos_alpha);
        double k_model = sample_at(model, d).k;
        rep.max_phase_mismatch = std::max(rep.max_phase_mismatch, std::fabs(k_bench - k_model));
    }
    return rep;
}

}  // namespace galrec::venus
