#pragma once

#include <span>
#include <vector>

#include "dsn/geometry.hpp"

namespace dsn {

// A sampled rule trajectory f(t), one position per tick t = 0..K.
using RuleTrajectory = std::vector<Position>;

// Lattice realisation S(t) of a rule trajectory. actions[t] takes
// nodes[t] to nodes[t + 1].
struct SwitchPlan {
    std::vector<GridIndex> nodes;
    std::vector<Action> actions;

    std::size_t ticks() const noexcept { return nodes.empty() ? 0 : nodes.size() - 1; }
};

// Summed Euclidean deviation between the plan's nodes and the trajectory.
// Terms are accumulated in tick order starting from 0.0; the solvers below
// rely on that order to report bit-identical totals.
double plan_cost(const SwitchPlan& plan, std::span<const Position> f, const Lattice& lattice);

// Per-tick deviation |node_position(S(t)) - f(t)|.
std::vector<double> plan_deviations(const SwitchPlan& plan, std::span<const Position> f,
                                    const Lattice& lattice);

// True when every step is Hold or a unit king move and actions agree with nodes.
bool is_adjacent_walk(const SwitchPlan& plan) noexcept;

// Online policy: at each tick take the action whose node is closest to the
// next sample. Ties go to the earlier entry of kTieOrder; nodes outside the
// domain are never candidates.
SwitchPlan greedy_quantize(std::span<const Position> f, GridIndex start, const Lattice& lattice);

inline constexpr int kDefaultCorridor = 3;

// Minimum-cost plan restricted to nodes within Chebyshev distance `window`
// of snap(f(t)) at every tick. Exact dynamic program over (tick, node).
SwitchPlan optimal_quantize(std::span<const Position> f, GridIndex start, const Lattice& lattice,
                            int window = kDefaultCorridor);

inline constexpr std::size_t kBruteForceMaxTicks = 6;

// Exhaustive search over all 9^K action sequences (K <= 6). Among equal
// totals, the sequence that is smallest in kTieOrder order wins.
SwitchPlan brute_force_quantize(std::span<const Position> f, GridIndex start, const Lattice& lattice);

} // namespace dsn
