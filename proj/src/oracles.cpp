#include "dsn/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dsn/geometry.hpp"

namespace dsn::oracle {

std::vector<MatchEvent> naive_find_match(std::span<const Trajectory> trajectories, std::int32_t particle,
                                         std::int32_t tick, SymmetryKind kind) {
    const Trajectory* self = nullptr;
    for (const Trajectory& tr : trajectories) {
        if (tr.particle == particle) self = &tr;
    }
    if (self == nullptr) return {};
    const GridIndex g = self->nodes[static_cast<std::size_t>(tick)];

    std::vector<GridIndex> images;
    const GridIndex candidates[3] = {{-g.i, g.j}, {g.i, -g.j}, {-g.i, -g.j}};
    const int count = kind == SymmetryKind::MirrorY ? 1 : 3;
    for (int k = 0; k < count; ++k) {
        if (candidates[k] != g && std::find(images.begin(), images.end(), candidates[k]) == images.end()) {
            images.push_back(candidates[k]);
        }
    }

    std::vector<MatchEvent> events;
    for (const GridIndex& img : images) {
        bool found = false;
        MatchEvent best{};
        for (const Trajectory& tr : trajectories) {
            for (std::size_t t = static_cast<std::size_t>(tick); t < tr.nodes.size(); ++t) {
                if (tr.nodes[t] != img) continue;
                if (tr.particle == particle && static_cast<std::int32_t>(t) == tick) continue;
                const MatchEvent cand{particle, tick, tr.particle, static_cast<std::int32_t>(t), img};
                const bool earlier = !found || cand.partner_tick < best.partner_tick ||
                                     (cand.partner_tick == best.partner_tick && cand.partner < best.partner);
                if (earlier) {
                    best = cand;
                    found = true;
                }
                break;
            }
        }
        if (!found) return {};
        events.push_back(best);
    }
    return events;
}

std::vector<Deposit> naive_deposits(std::span<const Trajectory> trajectories, const RuleConfig& cfg) {
    std::vector<Deposit> out;
    if (trajectories.empty()) return out;
    const std::size_t len = trajectories.front().nodes.size();
    for (std::size_t t = 0; t < len; ++t) {
        for (const Trajectory& tr : trajectories) {
            const auto tick = static_cast<std::int32_t>(t);
            const auto events = naive_find_match(trajectories, tr.particle, tick, cfg.kind_for(tr.particle));
            if (events.empty()) continue;
            out.push_back({tr.nodes[t], tick, tr.particle, DepositSource::Immediate});
            for (const MatchEvent& e : events) {
                out.push_back({e.image_node, e.partner_tick, e.partner, DepositSource::Scheduled});
            }
        }
    }
    // Keep one record per (node, tick, particle), immediate preferred.
    std::vector<Deposit> unique;
    for (const Deposit& d : out) {
        auto it = std::find_if(unique.begin(), unique.end(), [&](const Deposit& u) {
            return u.node == d.node && u.tick == d.tick && u.particle == d.particle;
        });
        if (it == unique.end()) unique.push_back(d);
        else if (d.source == DepositSource::Immediate) it->source = DepositSource::Immediate;
    }
    std::sort(unique.begin(), unique.end(), canonical_less);
    return unique;
}

std::vector<Visit> naive_lookup(std::span<const Trajectory> trajectories, GridIndex g) {
    std::vector<Visit> out;
    for (const Trajectory& tr : trajectories) {
        for (std::size_t t = 0; t < tr.nodes.size(); ++t) {
            if (tr.nodes[t] == g) out.push_back({static_cast<std::int32_t>(t), tr.particle});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

double resummed_cost(std::span<const GridIndex> nodes, std::span<const Position> f, int nodes_per_unit) {
    double sum = 0.0;
    double comp = 0.0;
    for (std::size_t t = 0; t < f.size(); ++t) {
        const double dx = static_cast<double>(nodes[t].i) / nodes_per_unit - f[t].x;
        const double dy = static_cast<double>(nodes[t].j) / nodes_per_unit - f[t].y;
        const double y = std::sqrt(dx * dx + dy * dy) - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    return sum;
}

QuantizerInstance random_quantizer_instance(Lcg64& rng, int nodes_per_unit, std::size_t ticks,
                                            double max_step_cells) {
    QuantizerInstance inst;
    inst.D = nodes_per_unit;
    const double h = 1.0 / nodes_per_unit;
    // Start near the middle of a unit disk so the domain rarely binds.
    const Position p0{(rng.next_unit() - 0.5) * 0.2, (rng.next_unit() - 0.5) * 0.2};
    inst.start = snap(p0, nodes_per_unit);
    Position p = p0;
    inst.f.push_back(p);
    for (std::size_t t = 0; t < ticks; ++t) {
        const double len = max_step_cells * h * rng.next_unit();
        const double ang = 2.0 * std::numbers::pi * rng.next_unit();
        p = {p.x + len * std::cos(ang), p.y + len * std::sin(ang)};
        inst.f.push_back(p);
    }
    return inst;
}

std::vector<Position> random_line(Lcg64& rng, int nodes_per_unit, std::size_t ticks, GridIndex start) {
    const double h = 1.0 / nodes_per_unit;
    const double ang = 2.0 * std::numbers::pi * rng.next_unit();
    const Position p0 = node_position(start, nodes_per_unit);
    std::vector<Position> f;
    f.reserve(ticks + 1);
    for (std::size_t t = 0; t <= ticks; ++t) {
        const double s = static_cast<double>(t) * h;
        f.push_back({p0.x + s * std::cos(ang), p0.y + s * std::sin(ang)});
    }
    return f;
}

std::vector<Trajectory> random_trajectories(Lcg64& rng, int particles, std::int64_t ticks, int nodes_per_unit) {
    const Domain dom{1.0};
    const Lattice lattice(nodes_per_unit, dom);
    const double dt = tick_duration(nodes_per_unit, 1.0);
    std::vector<Trajectory> out;
    for (int id = 0; id < particles; ++id) {
        MovementEquation eq;
        eq.p0 = sample_disk(rng, dom.r);
        eq.theta0 = 2.0 * std::numbers::pi * rng.next_unit();
        const auto path = ideal_path(eq, dom, ticks, dt);
        out.push_back(quantize_trajectory(id, path, start_node(eq.p0, lattice), lattice));
    }
    return out;
}

} // namespace dsn::oracle
