#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "dsn/symmetry.hpp"

namespace dsn {

// Fixed initial conditions replacing the sampled ones.
struct InitialOverride {
    std::optional<double> x0;
    std::optional<double> y0;
    std::optional<double> theta0;
};

// Parameters of one simulation.
//
// T is the motion time, N the particle count, S the rendered square side in
// pixels and D the number of lattice nodes per distance unit.
struct SimConfig {
    std::uint64_t seed = 0;
    double T = 0.0;
    int N = 0;
    int S = 1;
    int D = 0;
    double r = 1.0;
    double v = 1.0;
    SymmetryKind symmetry = SymmetryKind::MirrorY;
    double rule_probability = 1.0;
    int bins = 50;
    int image_width = 800;

    InitialOverride initial;                     // keys x0, y0, theta0
    std::map<int, InitialOverride> per_particle; // keys x0.<id>, y0.<id>, theta0.<id>
    std::map<int, SymmetryKind> rule_override;   // keys rule_override.<id>

    RuleConfig rule_config() const;
};

// Parses `key = value` lines; `#` starts a comment. T, N, D and symmetry are
// required. Throws ParseError naming the offending line and key.
SimConfig parse_config(std::string_view text);

SimConfig load_config(const std::string& path);

// Assigns one key from its textual value. Throws ParseError (line 0 unless
// given) for unknown keys or malformed values; does not check invariants.
void set_config_value(SimConfig& cfg, std::string_view key, std::string_view value, int line = 0);

// Checks cross-field invariants; throws ParseError naming the key.
void validate_config(const SimConfig& cfg);

} // namespace dsn
