#include "galrec/hydrostatics.hpp"

#include <cmath>

namespace galrec::hydrostatics {

FloatingPrism::FloatingPrism(double cross_section_, double height_, double density_ratio_)
    : cross_section(cross_section_), height(height_), density_ratio(density_ratio_) {
    if (!(cross_section > 0.0) || !(height > 0.0))
        throw DomainError("prism geometry must be positive");
    if (!(density_ratio > 0.0 && density_ratio < 1.0))
        throw DomainError("prism floats only for density ratio in (0,1)");
}

Container::Container(double cross_section_, double initial_water_volume_)
    : cross_section(cross_section_), initial_water_volume(initial_water_volume_) {
    if (!(cross_section > 0.0)) throw DomainError("container section must be positive");
    if (initial_water_volume < 0.0) throw DomainError("water volume must be non-negative");
}

FloatReport float_equilibrium(const FloatingPrism& body, const Container& container,
                              double fluid_density, double g) {
    const double a = body.cross_section;
    const double A = container.cross_section;
    if (!(A > a)) throw DomainError("container must be wider than the body");
    FloatReport r;
    r.draft = body.density_ratio * body.height;
    const double v0 = container.initial_water_volume;
    // volume conservation: A L1 - a draft = v0, body bottom at L1 - draft
    r.new_level = (v0 + a * r.draft) / A;
    const double required = r.draft * (A - a);
    if (r.new_level - r.draft <= 0.0)
        throw GroundedError("water too shallow: body rests on the bottom", required);
    r.initial_level = v0 / A;
    r.water_mass = fluid_density * v0;
    r.body_mass = body.density_ratio * fluid_density * a * body.height;
    r.submerged_volume = a * r.draft;
    const double bottom = r.new_level - r.draft;
    r.displaced_below_initial_level = a * (r.initial_level - bottom);
    r.buoyant_force = fluid_density * g * r.submerged_volume;
    r.body_weight = r.body_mass * g;
    return r;
}

std::vector<Material> default_materials() {
    return {{"gold", 19300.0}, {"silver", 10500.0}, {"water", 1000.0}};
}

WreathReport wreath_density(double weight_air, double weight_water, double fluid_density,
                            const std::vector<Material>& materials) {
    if (!(weight_air > weight_water) || !(weight_water > 0.0))
        throw NonPhysicalError("weights must satisfy weight_air > weight_water > 0");
    if (!(fluid_density > 0.0)) throw DomainError("fluid density must be positive");
    WreathReport rep;
    rep.density = weight_air / (weight_air - weight_water) * fluid_density;
    rep.classification = "alloy";
    for (const auto& m : materials) {
        if (std::fabs(rep.density - m.density) <= 0.02 * m.density) {
            rep.classification = "consistent-with " + m.name;
            break;
        }
    }
    return rep;
}

Paraboloid::Paraboloid(double focal_, double height_, double density_ratio_)
    : focal(focal_), height(height_), density_ratio(density_ratio_) {
    if (!(focal > 0.0) || !(height > 0.0)) throw DomainError("paraboloid geometry must be positive");
    if (!(density_ratio > 0.0 && density_ratio < 1.0))
        throw DomainError("paraboloid floats only for density ratio in (0,1)");
}

StabilityReport paraboloid_upright_stability(const Paraboloid& p) {
    StabilityReport rep;
    const double s = p.density_ratio;
    rep.draft = p.height * std::sqrt(s);
    rep.metacentric_height = 2.0 * rep.draft / 3.0 + 2.0 * p.focal - 2.0 * p.height / 3.0;
    rep.stable = rep.metacentric_height > 0.0;
    rep.critical_height = 3.0 * p.focal / (1.0 - std::sqrt(s));
    return rep;
}

std::vector<StabilityGridRow> stability_grid(const std::vector<double>& height_over_focal,
                                             const std::vector<double>& density_ratios) {
    std::vector<StabilityGridRow> rows;
    rows.reserve(height_over_focal.size() * density_ratios.size());
    for (double hf : height_over_focal) {
        for (double s : density_ratios) {
            StabilityReport r = paraboloid_upright_stability(Paraboloid(1.0, hf, s));
            rows.push_back({hf, s, r.metacentric_height, r.stable});
        }
    }
    return rows;
}

}  // namespace galrec::hydrostatics
