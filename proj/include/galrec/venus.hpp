#pragma once

#include <vector>

#include "galrec/kernels.hpp"

namespace galrec::venus {

/// Two-circle phase model: uniform coplanar circular orbits, phased so the
/// phase angle is 90 degrees at the anchor date on the branch approaching
/// inferior conjunction.
struct PhaseModel {
    double r_venus = 0.723;   // AU
    double r_earth = 1.0;     // AU
    double T_venus = 224.7;   // day
    double T_earth = 365.25;  // day
    void validate() const;
    double synodic_period() const;
    /// Heliocentric separation angle at a day offset from the anchor.
    double separation_at(double date_offset) const;
    /// Day offsets of the inferior/superior conjunctions nearest the anchor.
    double inferior_conjunction_offset() const;
};

struct PhaseSample {
    double date_offset;       // day from anchor
    double phase_angle;       // rad, sun-venus-earth
    double k;                 // illuminated fraction (1 + cos alpha)/2
    double diameter_ratio;    // relative to apparent diameter at the anchor
    double elongation;        // rad, sun-earth-venus
};

std::vector<PhaseSample> simulate(const PhaseModel& model, const std::vector<double>& dates);
PhaseSample sample_at(const PhaseModel& model, double date_offset);

/// The paper-of-record panel grid: 21-day steps bracketing the anchor.
std::vector<double> panel_dates();

struct NonlinearityProfile {
    double days_gibbous_to_near_half;  // k falling from 0.75 to 0.55
    double days_lingering_near_half;   // k falling from 0.55 to 0.45
};

/// Durations between phase-fraction crossings on the branch approaching
/// inferior conjunction, located by root finding on k(t) - threshold.
NonlinearityProfile nonlinearity_profile(const PhaseModel& model, double k_hi = 0.75,
                                         double k_mid = 0.55, double k_lo = 0.45);

struct TabletopReport {
    double scale_ratio;         // lamp distance / orbit radius
    double expected_ratio;      // r_venus / r_earth
    bool scale_valid;           // within 1e-2 relative
    double max_phase_mismatch;  // worst |k_tabletop - k_model| over the panel grid
};

/// Checks that the half-painted-sphere demonstration at the given bench
/// dimensions reproduces the simulated phases.
TabletopReport tabletop_equivalence(const PhaseModel& model, double lamp_distance = 4.34,
                                    double orbit_radius = 6.0);

}  // namespace galrec::venus
