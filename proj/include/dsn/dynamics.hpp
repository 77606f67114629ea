#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dsn/geometry.hpp"
#include "dsn/quantizer.hpp"

namespace dsn {

// Straight-line motion from p0 with heading theta0 (radians) at speed v.
struct MovementEquation {
    Position p0;
    double theta0 = 0.0;
    double v = 1.0;
};

struct Particle {
    int id = 0;
    MovementEquation eq;
};

// Lattice nodes visited by one particle, one per tick 0..K.
struct Trajectory {
    int particle = 0;
    std::vector<GridIndex> nodes;

    std::size_t ticks() const noexcept { return nodes.empty() ? 0 : nodes.size() - 1; }
};

// Tick duration giving one lattice cell of travel per tick: 1 / (D v).
double tick_duration(int nodes_per_unit, double speed);

// Number of ticks K = ceil(T D v) needed to cover `duration` time units.
std::int64_t tick_count(double duration, int nodes_per_unit, double speed);

// Positions at t * dt for t = 0..K along the billiard path inside the domain.
// Boundary crossings are resolved by exact ray-circle intersection and
// specular reflection, so a tick that straddles a bounce ends on the
// reflected leg.
std::vector<Position> ideal_path(const MovementEquation& eq, const Domain& dom, std::int64_t ticks, double dt);

// Start node for a particle: snap(p0) when that node is inside the domain,
// otherwise the closest in-domain neighbour (kTieOrder breaks ties).
GridIndex start_node(Position p0, const Lattice& lattice);

// Greedy lattice tracking of an ideal path.
Trajectory quantize_trajectory(int particle, std::span<const Position> ideal, GridIndex start,
                               const Lattice& lattice);

// A (tick, particle) pair recorded at some node.
struct Visit {
    std::int32_t tick = 0;
    std::int32_t particle = 0;

    friend constexpr auto operator<=>(const Visit&, const Visit&) = default;
};

// Node -> visits sorted by (tick, particle). Immutable after construction;
// safe to share across threads.
class VisitIndex {
public:
    VisitIndex() = default;
    // All trajectories must have the same length.
    explicit VisitIndex(std::span<const Trajectory> trajectories);

    std::span<const Visit> lookup(GridIndex g) const noexcept;

    // Earliest visit to g with tick >= t, or nullptr.
    const Visit* earliest_at_or_after(GridIndex g, std::int32_t t) const noexcept;

    std::size_t size() const noexcept { return visits_.size(); }
    std::size_t node_count() const noexcept { return keys_.size(); }
    std::span<const GridIndex> nodes() const noexcept { return keys_; }

private:
    std::vector<GridIndex> keys_;        // sorted, unique
    std::vector<std::uint32_t> offsets_; // keys_.size() + 1 entries
    std::vector<Visit> visits_;
};

VisitIndex build_visit_index(std::span<const Trajectory> trajectories);

} // namespace dsn
