#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dsn/dynamics.hpp"
#include "dsn/geometry.hpp"
#include "dsn/rng.hpp"

namespace dsn {

enum class SymmetryKind {
    MirrorY,  // (i, j) <-> (-i, j)
    FourFold, // reflections about both axes and the point reflection
};

std::string_view to_string(SymmetryKind kind) noexcept;
std::optional<SymmetryKind> parse_symmetry_kind(std::string_view text) noexcept;

// Images of g under the rule's symmetry group, excluding g itself.
// Order: (-i, j), (i, -j), (-i, -j), duplicates removed.
std::vector<GridIndex> orbit(GridIndex g, SymmetryKind kind);

struct MatchEvent {
    std::int32_t particle = 0;
    std::int32_t tick = 0;
    std::int32_t partner = 0;
    std::int32_t partner_tick = 0;
    GridIndex image_node;

    friend constexpr auto operator<=>(const MatchEvent&, const MatchEvent&) = default;
};

struct RuleConfig {
    SymmetryKind kind = SymmetryKind::MirrorY;
    double probability = 1.0;
    std::map<int, SymmetryKind> overrides;

    SymmetryKind kind_for(int particle) const;
    void validate() const;
};

// Matches for particle `particle` standing on g at `tick`: for every orbit
// image, the earliest visit at tick >= `tick`. Returns one event per image
// when all images are matched, otherwise nothing. An empty orbit never
// matches.
std::vector<MatchEvent> find_match(std::int32_t particle, std::int32_t tick, GridIndex g,
                                   const VisitIndex& index, SymmetryKind kind);

std::vector<MatchEvent> find_match(std::int32_t particle, std::int32_t tick, GridIndex g,
                                   const VisitIndex& index, const RuleConfig& cfg);

enum class DepositSource : std::uint8_t { Immediate, Scheduled };

std::string_view to_string(DepositSource source) noexcept;

// A frozen pattern point.
struct Deposit {
    GridIndex node;
    std::int32_t tick = 0;
    std::int32_t particle = 0;
    DepositSource source = DepositSource::Immediate;

    friend constexpr bool operator==(const Deposit&, const Deposit&) = default;
};

// Canonical order: (tick, particle, node).
bool canonical_less(const Deposit& a, const Deposit& b) noexcept;

// Runs the rule over every (tick, particle) pair in ascending order. A firing
// match freezes the particle's current node (immediate) and each matched
// partner visit (scheduled). Motion is never altered. Draws one uniform per
// check from `rng` only when cfg.probability < 1.
//
// The result is deduplicated on (node, tick, particle), preferring the
// immediate record, and sorted canonically.
std::vector<Deposit> apply_rule(std::span<const Trajectory> trajectories, const VisitIndex& index,
                                const RuleConfig& cfg, Lcg64& rng);

struct RuleDescriptor {
    bool reads_future = false;
    bool modifies_motion = false;
};

enum class GuardVerdict { Ok, Rejected };

// A rule that both looks ahead and steers particles could feed its own
// premise; such rules are refused.
constexpr GuardVerdict causality_guard(RuleDescriptor rule) noexcept {
    return rule.reads_future && rule.modifies_motion ? GuardVerdict::Rejected : GuardVerdict::Ok;
}

constexpr RuleDescriptor symmetry_rule_descriptor(SymmetryKind) noexcept { return {true, false}; }

} // namespace dsn
