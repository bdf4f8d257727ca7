#include "galrec/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace galrec::config {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_real(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        double x = std::stod(v, &pos);
        if (pos != v.size()) throw ConfigError("trailing characters in value for " + key);
        return x;
    } catch (const ConfigError&) {
        throw;
    } catch (...) {
        throw ConfigError("cannot parse real value for " + key + ": '" + v + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

}  // namespace

RunConfig parse_config_text(const std::string& text,
                            const std::vector<std::string>& known_claim_ids) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = line;
        std::size_t hash = stripped.find('#');
        if (hash != std::string::npos) stripped = stripped.substr(0, hash);
        stripped = trim(stripped);
        if (stripped.empty()) continue;
        std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(stripped.substr(0, eq));
        std::string value = trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": empty key or value");

        auto& c = cfg.constants;
        if (key == "g") c.g = parse_real(value, key);
        else if (key == "G") c.G = parse_real(value, key);
        else if (key == "M_sun") c.M_sun = parse_real(value, key);
        else if (key == "M_earth") c.M_earth = parse_real(value, key);
        else if (key == "R_earth") c.R_earth = parse_real(value, key);
        else if (key == "AU") c.AU = parse_real(value, key);
        else if (key == "sidereal_day") c.sidereal_day = parse_real(value, key);
        else if (key == "lunar_sidereal_month") c.lunar_sidereal_month = parse_real(value, key);
        else if (key == "moon_distance") c.moon_distance = parse_real(value, key);
        else if (key == "mizar.intrinsic_offset_arcsec")
            cfg.mizar_intrinsic_offset_arcsec = parse_real(value, key);
        else if (key == "parallelism")
            cfg.parallelism = static_cast<int>(parse_real(value, key));
        else if (key.rfind("planets.", 0) == 0) {
            auto parts = split(key, '.');
            if (parts.size() != 3) throw ConfigError("bad planet key: " + key);
            auto it = std::find_if(cfg.planets.begin(), cfg.planets.end(),
                                   [&](const celestial::PlanetEntry& p) { return p.name == parts[1]; });
            if (it == cfg.planets.end()) throw ConfigError("unknown planet: " + parts[1]);
            if (parts[2] == "radius_au") it->radius_au = parse_real(value, key);
            else if (parts[2] == "period_days") it->period_days = parse_real(value, key);
            else throw ConfigError("unknown planet field: " + parts[2]);
        } else if (key.rfind("tolerance.", 0) == 0) {
            auto parts = split(key, '.');
            if (parts.size() != 3) throw ConfigError("bad tolerance key: " + key);
            const std::string& claim = parts[1];
            if (std::find(known_claim_ids.begin(), known_claim_ids.end(), claim) ==
                known_claim_ids.end())
                throw ConfigError("tolerance override for unknown claim: " + claim);
            auto& ov = cfg.tolerance_overrides[claim];
            if (parts[2] == "abs") ov.abs = parse_real(value, key);
            else if (parts[2] == "rel") ov.rel = parse_real(value, key);
            else throw ConfigError("unknown tolerance field: " + parts[2]);
        } else {
            throw ConfigError("unknown configuration key: " + key);
        }
    }
    if (cfg.parallelism < 1) throw ConfigError("parallelism must be >= 1");
    cfg.constants.validate();
    return cfg;
}

RunConfig load_config_file(const std::string& path,
                           const std::vector<std::string>& known_claim_ids) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), known_claim_ids);
}

}  // namespace galrec::config
