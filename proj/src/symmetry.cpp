#include "dsn/symmetry.hpp"

#include <algorithm>
#include <string>

#include "dsn/error.hpp"

namespace dsn {

std::string_view to_string(SymmetryKind kind) noexcept {
    switch (kind) {
    case SymmetryKind::MirrorY: return "mirror_y";
    case SymmetryKind::FourFold: return "fourfold";
    }
    return "?";
}

std::optional<SymmetryKind> parse_symmetry_kind(std::string_view text) noexcept {
    if (text == "mirror_y") return SymmetryKind::MirrorY;
    if (text == "fourfold") return SymmetryKind::FourFold;
    return std::nullopt;
}

std::string_view to_string(DepositSource source) noexcept {
    return source == DepositSource::Immediate ? "immediate" : "scheduled";
}

std::vector<GridIndex> orbit(GridIndex g, SymmetryKind kind) {
    std::vector<GridIndex> images;
    auto add = [&](GridIndex img) {
        if (img == g) return;
        if (std::find(images.begin(), images.end(), img) != images.end()) return;
        images.push_back(img);
    };
    add({-g.i, g.j});
    if (kind == SymmetryKind::FourFold) {
        add({g.i, -g.j});
        add({-g.i, -g.j});
    }
    return images;
}

SymmetryKind RuleConfig::kind_for(int particle) const {
    const auto it = overrides.find(particle);
    return it == overrides.end() ? kind : it->second;
}

void RuleConfig::validate() const {
    if (!(probability >= 0.0 && probability <= 1.0)) {
        throw InvalidParameter("rule probability must lie in [0, 1]");
    }
}

std::vector<MatchEvent> find_match(std::int32_t particle, std::int32_t tick, GridIndex g,
                                   const VisitIndex& index, SymmetryKind kind) {
    std::vector<MatchEvent> events;
    const std::vector<GridIndex> images = orbit(g, kind);
    events.reserve(images.size());
    for (const GridIndex& img : images) {
        // img != g, so the querying visit itself can never be returned.
        const Visit* v = index.earliest_at_or_after(img, tick);
        if (v == nullptr) return {};
        events.push_back({particle, tick, v->particle, v->tick, img});
    }
    return events;
}

std::vector<MatchEvent> find_match(std::int32_t particle, std::int32_t tick, GridIndex g,
                                   const VisitIndex& index, const RuleConfig& cfg) {
    return find_match(particle, tick, g, index, cfg.kind_for(particle));
}

bool canonical_less(const Deposit& a, const Deposit& b) noexcept {
    if (a.tick != b.tick) return a.tick < b.tick;
    if (a.particle != b.particle) return a.particle < b.particle;
    return a.node < b.node;
}

std::vector<Deposit> apply_rule(std::span<const Trajectory> trajectories, const VisitIndex& index,
                                const RuleConfig& cfg, Lcg64& rng) {
    cfg.validate();
    std::vector<Deposit> out;
    if (trajectories.empty() || cfg.probability == 0.0) return out;

    std::vector<const Trajectory*> by_id(trajectories.size(), nullptr);
    for (const Trajectory& tr : trajectories) {
        const auto id = static_cast<std::size_t>(tr.particle);
        if (tr.particle < 0 || id >= by_id.size() || by_id[id] != nullptr) {
            throw InvalidInput("apply_rule: particle ids must be unique and dense from 0");
        }
        by_id[id] = &tr;
    }

    const std::size_t len = trajectories.front().nodes.size();
    const bool stochastic = cfg.probability < 1.0;
    for (std::size_t t = 0; t < len; ++t) {
        const auto tick = static_cast<std::int32_t>(t);
        for (const Trajectory* tr : by_id) {
            if (stochastic && !(rng.next_unit() < cfg.probability)) continue;
            const GridIndex g = tr->nodes[t];
            const std::vector<MatchEvent> events = find_match(tr->particle, tick, g, index, cfg);
            if (events.empty()) continue;
            out.push_back({g, tick, tr->particle, DepositSource::Immediate});
            for (const MatchEvent& e : events) {
                out.push_back({e.image_node, e.partner_tick, e.partner, DepositSource::Scheduled});
            }
        }
    }

    std::sort(out.begin(), out.end(), [](const Deposit& a, const Deposit& b) {
        if (canonical_less(a, b)) return true;
        if (canonical_less(b, a)) return false;
        return a.source < b.source;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Deposit& a, const Deposit& b) {
                              return a.tick == b.tick && a.particle == b.particle && a.node == b.node;
                          }),
              out.end());
    return out;
}

} // namespace dsn
