#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "galrec/celestial.hpp"
#include "galrec/kernels.hpp"
#include "galrec/kinematics.hpp"

namespace galrec::config {

struct ToleranceOverride {
    std::optional<double> abs;
    std::optional<double> rel;
};

/// Run-wide configuration: constant overrides, per-claim tolerance
/// overrides, output shape, parallelism. Built once, then read-only.
struct RunConfig {
    kinematics::PhysicalConstants constants;
    std::vector<celestial::PlanetEntry> planets = celestial::default_planets();
    double mizar_intrinsic_offset_arcsec = 15.0;
    std::map<std::string, ToleranceOverride> tolerance_overrides;
    std::string format = "md";
    std::string output_path;
    int parallelism = 1;
};

/// Flat key = value text, "#" comments. Unknown keys are a configuration
/// error raised before any claim runs.
RunConfig parse_config_text(const std::string& text,
                            const std::vector<std::string>& known_claim_ids);

RunConfig load_config_file(const std::string& path,
                           const std::vector<std::string>& known_claim_ids);

}  // namespace galrec::config
