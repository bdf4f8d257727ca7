#pragma once

#include <string>
#include <vector>

#include "galrec/kernels.hpp"

namespace galrec::hydrostatics {

/// Constant-section floating body (the wine-cooler argument needs no more).
struct FloatingPrism {
    double cross_section;  // m^2
    double height;         // m
    double density_ratio;  // body/fluid, in (0,1)
    FloatingPrism(double cross_section_, double height_, double density_ratio_);
};

struct Container {
    double cross_section;        // m^2
    double initial_water_volume; // m^3
    Container(double cross_section_, double initial_water_volume_);
};

struct FloatReport {
    double draft;                        // m, container independent
    double initial_level;                // m
    double new_level;                    // m
    double water_mass;                   // kg
    double body_mass;                    // kg
    double submerged_volume;             // m^3
    double displaced_below_initial_level;// m^3
    double buoyant_force;                // N, from volume below the current level
    double body_weight;                  // N
};

FloatReport float_equilibrium(const FloatingPrism& body, const Container& container,
                              double fluid_density = 1000.0, double g = 9.8);

struct WreathReport {
    double density;             // kg/m^3
    std::string classification; // "consistent-with <material>" or "alloy"
};

struct Material {
    std::string name;
    double density;
};

std::vector<Material> default_materials();

/// Body density from weighings in air and in water; classified against a
/// material table with 2% tolerance.
WreathReport wreath_density(double weight_air, double weight_water, double fluid_density,
                            const std::vector<Material>& materials = default_materials());

struct Paraboloid {
    double focal;          // m; profile z = r^2 / (4 focal)
    double height;         // m
    double density_ratio;  // body/fluid, in (0,1)
    Paraboloid(double focal_, double height_, double density_ratio_);
};

struct StabilityReport {
    double draft;              // H sqrt(s)
    double metacentric_height; // 2 d / 3 + 2 f - 2 H / 3
    bool stable;               // GM > 0
    double critical_height;    // 3 f / (1 - sqrt(s))
};

StabilityReport paraboloid_upright_stability(const Paraboloid& p);

struct StabilityGridRow {
    double height_over_focal;
    double density_ratio;
    double metacentric_height;
    bool stable;
};

std::vector<StabilityGridRow> stability_grid(const std::vector<double>& height_over_focal,
                                             const std::vector<double>& density_ratios);

}  // namespace galrec::hydrostatics
