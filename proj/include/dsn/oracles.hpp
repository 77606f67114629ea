#pragma once

// Slow reference implementations used by `dsn verify` and the test suites.
// None of these touch VisitIndex or the solvers they are compared against.

#include <cstdint>
#include <span>
#include <vector>

#include "dsn/dynamics.hpp"
#include "dsn/quantizer.hpp"
#include "dsn/rng.hpp"
#include "dsn/symmetry.hpp"

namespace dsn::oracle {

// find_match by scanning every (particle, tick) of every trajectory.
std::vector<MatchEvent> naive_find_match(std::span<const Trajectory> trajectories, std::int32_t particle,
                                         std::int32_t tick, SymmetryKind kind);

// apply_rule with probability 1, built on naive_find_match.
std::vector<Deposit> naive_deposits(std::span<const Trajectory> trajectories, const RuleConfig& cfg);

// Visits at g collected by a double loop, sorted by (tick, particle).
std::vector<Visit> naive_lookup(std::span<const Trajectory> trajectories, GridIndex g);

// Sum of per-tick deviations accumulated with Kahan compensation.
double resummed_cost(std::span<const GridIndex> nodes, std::span<const Position> f, int nodes_per_unit);

// Quantizer test instance: start node on the lattice and a random walk
// whose per-tick displacement is at most `max_step` cells.
struct QuantizerInstance {
    int D = 4;
    GridIndex start;
    std::vector<Position> f;
};

QuantizerInstance random_quantizer_instance(Lcg64& rng, int nodes_per_unit, std::size_t ticks,
                                            double max_step_cells = 1.0);

// Straight line from a lattice node at a random angle, one cell per tick.
std::vector<Position> random_line(Lcg64& rng, int nodes_per_unit, std::size_t ticks, GridIndex start);

// Random trajectories with random headings inside the unit disk.
std::vector<Trajectory> random_trajectories(Lcg64& rng, int particles, std::int64_t ticks, int nodes_per_unit);

} // namespace dsn::oracle
