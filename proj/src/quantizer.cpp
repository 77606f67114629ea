#include "dsn/quantizer.hpp"

#include <cstdint>
#include <limits>

#include "dsn/error.hpp"

namespace dsn {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kMaxDpStates = std::size_t{1} << 26;

void require_start(GridIndex start, const Lattice& lattice) {
    if (!lattice.contains(start)) throw InvalidParameter("quantize: start node lies outside the domain");
}

void require_samples(std::span<const Position> f) {
    if (f.empty()) throw InvalidInput("quantize: rule trajectory is empty");
}

SwitchPlan plan_from_actions(GridIndex start, std::span<const Action> actions) {
    SwitchPlan plan;
    plan.nodes.reserve(actions.size() + 1);
    plan.nodes.push_back(start);
    plan.actions.assign(actions.begin(), actions.end());
    for (Action a : actions) plan.nodes.push_back(apply(plan.nodes.back(), a));
    return plan;
}

} // namespace

double plan_cost(const SwitchPlan& plan, std::span<const Position> f, const Lattice& lattice) {
    if (plan.nodes.size() != f.size()) throw InvalidInput("plan_cost: plan and trajectory lengths differ");
    double total = 0.0;
    for (std::size_t t = 0; t < f.size(); ++t) total += distance(lattice.node_position(plan.nodes[t]), f[t]);
    return total;
}

std::vector<double> plan_deviations(const SwitchPlan& plan, std::span<const Position> f,
                                    const Lattice& lattice) {
    if (plan.nodes.size() != f.size()) throw InvalidInput("plan_deviations: plan and trajectory lengths differ");
    std::vector<double> out(f.size());
    for (std::size_t t = 0; t < f.size(); ++t) out[t] = distance(lattice.node_position(plan.nodes[t]), f[t]);
    return out;
}

bool is_adjacent_walk(const SwitchPlan& plan) noexcept {
    if (plan.nodes.empty()) return plan.actions.empty();
    if (plan.actions.size() + 1 != plan.nodes.size()) return false;
    for (std::size_t t = 0; t < plan.actions.size(); ++t) {
        if (apply(plan.nodes[t], plan.actions[t]) != plan.nodes[t + 1]) return false;
    }
    return true;
}

SwitchPlan greedy_quantize(std::span<const Position> f, GridIndex start, const Lattice& lattice) {
    require_samples(f);
    require_start(start, lattice);

    SwitchPlan plan;
    plan.nodes.reserve(f.size());
    plan.actions.reserve(f.size() - 1);
    plan.nodes.push_back(start);

    GridIndex current = start;
    for (std::size_t t = 1; t < f.size(); ++t) {
        Action best = Action::Hold;
        double best_dist = kInf;
        for (Action a : kTieOrder) {
            const GridIndex cand = apply(current, a);
            if (a != Action::Hold && !lattice.contains(cand)) continue;
            const double d = distance(lattice.node_position(cand), f[t]);
            if (d < best_dist) {
                best_dist = d;
                best = a;
            }
        }
        current = apply(current, best);
        plan.actions.push_back(best);
        plan.nodes.push_back(current);
    }
    return plan;
}

SwitchPlan optimal_quantize(std::span<const Position> f, GridIndex start, const Lattice& lattice,
                            int window) {
    require_samples(f);
    if (window < 1) throw InvalidParameter("optimal_quantize: window must be >= 1");
    require_start(start, lattice);

    const std::size_t side = 2 * static_cast<std::size_t>(window) + 1;
    const std::size_t layer = side * side;
    if (f.size() > kMaxDpStates / layer) throw BudgetExceeded("optimal_quantize: state space too large");

    std::vector<GridIndex> centre(f.size());
    for (std::size_t t = 0; t < f.size(); ++t) centre[t] = lattice.snap(f[t]);

    // Slot of node g in layer t, or -1 outside the corridor.
    auto slot = [&](std::size_t t, GridIndex g) -> std::ptrdiff_t {
        const std::int32_t di = g.i - centre[t].i + window;
        const std::int32_t dj = g.j - centre[t].j + window;
        if (di < 0 || dj < 0 || di >= static_cast<std::int32_t>(side) || dj >= static_cast<std::int32_t>(side)) {
            return -1;
        }
        return static_cast<std::ptrdiff_t>(di) * static_cast<std::ptrdiff_t>(side) + dj;
    };
    auto node_at = [&](std::size_t t, std::size_t s) -> GridIndex {
        return {centre[t].i + static_cast<std::int32_t>(s / side) - window,
                centre[t].j + static_cast<std::int32_t>(s % side) - window};
    };

    const std::ptrdiff_t start_slot = slot(0, start);
    if (start_slot < 0) throw Infeasible("optimal_quantize: start lies outside the corridor at t = 0");

    std::vector<double> cost(f.size() * layer, kInf);
    std::vector<Action> via(f.size() * layer, Action::Hold);
    cost[static_cast<std::size_t>(start_slot)] = distance(lattice.node_position(start), f[0]);

    for (std::size_t t = 1; t < f.size(); ++t) {
        const double* prev = cost.data() + (t - 1) * layer;
        double* cur = cost.data() + t * layer;
        Action* cur_via = via.data() + t * layer;
        for (std::size_t s = 0; s < layer; ++s) {
            const GridIndex node = node_at(t, s);
            if (!lattice.contains(node)) continue;
            double best = kInf;
            Action best_action = Action::Hold;
            for (Action a : kTieOrder) {
                // Predecessor p with apply(p, a) == node.
                GridIndex p = node;
                if (a != Action::Hold) {
                    const GridIndex off = kMoveOffsets[static_cast<std::size_t>(a)];
                    p = {node.i - off.i, node.j - off.j};
                }
                const std::ptrdiff_t ps = slot(t - 1, p);
                if (ps < 0 || prev[ps] == kInf) continue;
                if (prev[ps] < best) {
                    best = prev[ps];
                    best_action = a;
                }
            }
            if (best == kInf) continue;
            // Floating addition is monotone, so adding the shared term after
            // the comparison yields the same minimum as comparing full sums.
            cur[s] = best + distance(lattice.node_position(node), f[t]);
            cur_via[s] = best_action;
        }
    }

    const std::size_t last = f.size() - 1;
    std::ptrdiff_t best_slot = -1;
    double best_total = kInf;
    for (std::size_t s = 0; s < layer; ++s) {
        const double c = cost[last * layer + s];
        if (c < best_total) {
            best_total = c;
            best_slot = static_cast<std::ptrdiff_t>(s);
        }
    }
    if (best_slot < 0) throw Infeasible("optimal_quantize: no plan stays inside the corridor");

    std::vector<Action> actions(last);
    GridIndex node = node_at(last, static_cast<std::size_t>(best_slot));
    for (std::size_t t = last; t > 0; --t) {
        const auto s = static_cast<std::size_t>(slot(t, node));
        const Action a = via[t * layer + s];
        actions[t - 1] = a;
        if (a != Action::Hold) {
            const GridIndex off = kMoveOffsets[static_cast<std::size_t>(a)];
            node = {node.i - off.i, node.j - off.j};
        }
    }
    return plan_from_actions(start, actions);
}

namespace {

struct BruteSearch {
    std::span<const Position> f;
    const Lattice& lattice;
    std::vector<Action> current;
    std::vector<Action> best;
    double best_total = kInf;

    void descend(GridIndex node, std::size_t t, double total) {
        if (t + 1 == f.size()) {
            if (total < best_total) {
                best_total = total;
                best = current;
            }
            return;
        }
        for (Action a : kTieOrder) {
            const GridIndex next = apply(node, a);
            if (a != Action::Hold && !lattice.contains(next)) continue;
            current[t] = a;
            descend(next, t + 1, total + distance(lattice.node_position(next), f[t + 1]));
        }
    }
};

} // namespace

SwitchPlan brute_force_quantize(std::span<const Position> f, GridIndex start, const Lattice& lattice) {
    require_samples(f);
    if (f.size() - 1 > kBruteForceMaxTicks) throw BudgetExceeded("brute_force_quantize: K > 6");
    require_start(start, lattice);

    BruteSearch search{f, lattice, std::vector<Action>(f.size() - 1), {}, kInf};
    search.descend(start, 0, 0.0 + distance(lattice.node_position(start), f[0]));
    return plan_from_actions(start, search.best);
}

} // namespace dsn
