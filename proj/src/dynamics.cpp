#include "dsn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dsn/error.hpp"

namespace dsn {

double tick_duration(int nodes_per_unit, double speed) {
    if (nodes_per_unit < 1) throw InvalidParameter("tick_duration: D must be >= 1");
    if (!(speed > 0.0)) throw InvalidParameter("tick_duration: speed must be positive");
    return 1.0 / (nodes_per_unit * speed);
}

std::int64_t tick_count(double duration, int nodes_per_unit, double speed) {
    if (!(duration > 0.0)) throw InvalidParameter("tick_count: duration must be positive");
    if (nodes_per_unit < 1) throw InvalidParameter("tick_count: D must be >= 1");
    if (!(speed > 0.0)) throw InvalidParameter("tick_count: speed must be positive");
    const double k = std::ceil(duration * nodes_per_unit * speed);
    if (k > static_cast<double>(std::numeric_limits<std::int32_t>::max())) {
        throw InvalidParameter("tick_count: too many ticks");
    }
    return static_cast<std::int64_t>(k);
}

std::vector<Position> ideal_path(const MovementEquation& eq, const Domain& dom, std::int64_t ticks, double dt) {
    if (ticks < 0) throw InvalidParameter("ideal_path: negative tick count");
    if (!(eq.v > 0.0)) throw InvalidParameter("ideal_path: speed must be positive");
    if (!(dt > 0.0)) throw InvalidParameter("ideal_path: dt must be positive");
    if (!(eq.p0.x * eq.p0.x + eq.p0.y * eq.p0.y < dom.r * dom.r)) {
        throw InvalidParameter("ideal_path: initial position outside the domain");
    }

    const double step = eq.v * dt;
    std::vector<Position> out;
    out.reserve(static_cast<std::size_t>(ticks) + 1);
    Position pos = eq.p0;
    Direction dir = Direction::from_angle(eq.theta0);
    out.push_back(pos);

    for (std::int64_t t = 1; t <= ticks; ++t) {
        double remaining = step;
        for (;;) {
            const BoundaryHit hit = next_boundary_hit(pos, dir, dom);
            if (hit.distance >= remaining) {
                pos = advance(pos, dir, remaining);
                break;
            }
            pos = hit.point;
            remaining -= hit.distance;
            dir = reflect(pos, dir, dom);
        }
        out.push_back(pos);
    }
    return out;
}

GridIndex start_node(Position p0, const Lattice& lattice) {
    const GridIndex snapped = lattice.snap(p0);
    if (lattice.contains(snapped)) return snapped;
    GridIndex best{};
    double best_dist = std::numeric_limits<double>::infinity();
    for (const GridIndex& n : neighbors8(snapped)) {
        if (!lattice.contains(n)) continue;
        const double d = distance(lattice.node_position(n), p0);
        if (d < best_dist) {
            best_dist = d;
            best = n;
        }
    }
    if (best_dist == std::numeric_limits<double>::infinity()) {
        throw InvalidParameter("start_node: no lattice node inside the domain near the start position");
    }
    return best;
}

Trajectory quantize_trajectory(int particle, std::span<const Position> ideal, GridIndex start,
                               const Lattice& lattice) {
    SwitchPlan plan = greedy_quantize(ideal, start, lattice);
    return {particle, std::move(plan.nodes)};
}

VisitIndex::VisitIndex(std::span<const Trajectory> trajectories) {
    if (trajectories.empty()) {
        offsets_.push_back(0);
        return;
    }
    const std::size_t len = trajectories.front().nodes.size();
    for (const Trajectory& tr : trajectories) {
        if (tr.nodes.size() != len) throw InvalidInput("visit index: trajectories differ in length");
    }
    const std::size_t total = len * trajectories.size();
    if (total > std::numeric_limits<std::uint32_t>::max()) throw InvalidInput("visit index: too many visits");

    struct Entry {
        GridIndex node;
        Visit visit;
    };
    std::vector<Entry> entries;
    entries.reserve(total);
    for (const Trajectory& tr : trajectories) {
        for (std::size_t t = 0; t < len; ++t) {
            entries.push_back({tr.nodes[t], {static_cast<std::int32_t>(t), tr.particle}});
        }
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.node != b.node) return a.node < b.node;
        return a.visit < b.visit;
    });

    visits_.reserve(total);
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (k == 0 || entries[k].node != entries[k - 1].node) {
            keys_.push_back(entries[k].node);
            offsets_.push_back(static_cast<std::uint32_t>(k));
        }
        visits_.push_back(entries[k].visit);
    }
    offsets_.push_back(static_cast<std::uint32_t>(visits_.size()));
}

std::span<const Visit> VisitIndex::lookup(GridIndex g) const noexcept {
    const auto it = std::lower_bound(keys_.begin(), keys_.end(), g);
    if (it == keys_.end() || *it != g) return {};
    const auto k = static_cast<std::size_t>(it - keys_.begin());
    return std::span<const Visit>(visits_).subspan(offsets_[k], offsets_[k + 1] - offsets_[k]);
}

const Visit* VisitIndex::earliest_at_or_after(GridIndex g, std::int32_t t) const noexcept {
    const std::span<const Visit> visits = lookup(g);
    const auto it = std::lower_bound(visits.begin(), visits.end(), Visit{t, std::numeric_limits<std::int32_t>::min()});
    return it == visits.end() ? nullptr : &*it;
}

VisitIndex build_visit_index(std::span<const Trajectory> trajectories) { return VisitIndex(trajectories); }

} // namespace dsn
