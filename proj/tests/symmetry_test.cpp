#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "dsn/config.hpp"
#include "dsn/error.hpp"
#include "dsn/oracles.hpp"
#include "dsn/simulation.hpp"
#include "dsn/symmetry.hpp"

using namespace dsn;

namespace {

std::vector<Trajectory> chord_particles(std::initializer_list<MovementEquation> eqs, int d, std::int64_t ticks) {
    const Lattice lat(d, Domain{1.0});
    std::vector<Trajectory> out;
    int id = 0;
    for (const MovementEquation& eq : eqs) {
        const auto path = ideal_path(eq, lat.domain(), ticks, tick_duration(d, eq.v));
        out.push_back(quantize_trajectory(id++, path, start_node(eq.p0, lat), lat));
    }
    return out;
}

std::set<GridIndex> deposit_nodes(const std::vector<Deposit>& deposits) {
    std::set<GridIndex> nodes;
    for (const Deposit& d : deposits) nodes.insert(d.node);
    return nodes;
}

} // namespace

TEST_SUITE("symmetry") {

TEST_CASE("orbit") {
    CHECK(orbit({3, 2}, SymmetryKind::MirrorY) == std::vector<GridIndex>{{-3, 2}});
    CHECK(orbit({3, 2}, SymmetryKind::FourFold) == std::vector<GridIndex>{{-3, 2}, {3, -2}, {-3, -2}});
    CHECK(orbit({0, 5}, SymmetryKind::MirrorY).empty());
    CHECK(orbit({0, 5}, SymmetryKind::FourFold) == std::vector<GridIndex>{{0, -5}});
    CHECK(orbit({4, 0}, SymmetryKind::FourFold) == std::vector<GridIndex>{{-4, 0}});
    CHECK(orbit({0, 0}, SymmetryKind::FourFold).empty());
}

TEST_CASE("symmetry kind names round trip") {
    for (SymmetryKind k : {SymmetryKind::MirrorY, SymmetryKind::FourFold}) CHECK(parse_symmetry_kind(to_string(k)) == k);
    CHECK_FALSE(parse_symmetry_kind("diagonal").has_value());
}

TEST_CASE("find_match looks at the present and the future only") {
    const std::vector<Trajectory> present{{0, {{0, 0}, {4, 2}, {4, 3}}}, {1, {{0, 1}, {-4, 2}, {-4, 3}}}};
    const VisitIndex idx(present);
    const auto events = find_match(0, 1, {4, 2}, idx, SymmetryKind::MirrorY);
    REQUIRE(events.size() == 1);
    CHECK(events[0] == MatchEvent{0, 1, 1, 1, {-4, 2}});

    const std::vector<Trajectory> past{{0, {{0, 0}, {1, 0}, {4, 2}}}, {1, {{0, 1}, {-4, 2}, {-3, 2}}}};
    const VisitIndex idx_past(past);
    CHECK(find_match(0, 2, {4, 2}, idx_past, SymmetryKind::MirrorY).empty());
}

TEST_CASE("find_match picks the earliest qualifying visit") {
    const std::vector<Trajectory> tr{{0, {{2, 0}, {2, 1}, {2, 2}, {2, 3}}},
                                     {1, {{0, 0}, {0, 1}, {-2, 0}, {-2, 0}}},
                                     {2, {{-2, 0}, {-1, 0}, {-1, 1}, {-2, 0}}}};
    const VisitIndex idx(tr);
    const auto ev = find_match(0, 1, {2, 0}, idx, SymmetryKind::MirrorY);
    REQUIRE(ev.size() == 1);
    CHECK(ev[0].partner == 1);
    CHECK(ev[0].partner_tick == 2);
}

TEST_CASE("fourfold needs every image") {
    const std::vector<Trajectory> partial{{0, {{3, 2}, {3, 2}}}, {1, {{-3, 2}, {3, -2}}}};
    CHECK(find_match(0, 0, {3, 2}, VisitIndex(partial), SymmetryKind::FourFold).empty());

    const std::vector<Trajectory> full{{0, {{3, 2}, {3, 2}}}, {1, {{-3, 2}, {3, -2}}}, {2, {{0, 0}, {-3, -2}}}};
    const auto ev = find_match(0, 0, {3, 2}, VisitIndex(full), SymmetryKind::FourFold);
    REQUIRE(ev.size() == 3);
    CHECK(ev[0] == MatchEvent{0, 0, 1, 0, {-3, 2}});
    CHECK(ev[1] == MatchEvent{0, 0, 1, 1, {3, -2}});
    CHECK(ev[2] == MatchEvent{0, 0, 2, 1, {-3, -2}});
}

TEST_CASE("a single vertical chord matches its own future") {
    const auto tr = chord_particles({{{0.5, 0.0}, std::numbers::pi / 2, 1.0}}, 20, 400);
    const VisitIndex idx(tr);
    int matches = 0;
    for (std::size_t t = 0; t < tr[0].nodes.size(); ++t) {
        const auto tick = static_cast<std::int32_t>(t);
        const auto got = find_match(0, tick, tr[0].nodes[t], idx, SymmetryKind::MirrorY);
        REQUIRE(got == oracle::naive_find_match(tr, 0, tick, SymmetryKind::MirrorY));
        if (!got.empty()) {
            ++matches;
            CHECK(got[0].partner == 0);
            CHECK(got[0].partner_tick > tick);
        }
    }
    CHECK(matches > 0);
}

TEST_CASE("apply_rule: nothing symmetric, nothing deposited") {
    const std::vector<Trajectory> tr{{0, {{1, 1}, {2, 1}, {3, 1}}}};
    Lcg64 rng(1);
    CHECK(apply_rule(tr, VisitIndex(tr), RuleConfig{}, rng).empty());
}

TEST_CASE("apply_rule: a mirrored pair deposits at every tick") {
    const double theta = 0.7;
    // D = 20 keeps 0.3 D off the half-cell tie, which rounds toward +inf and
    // would start the pair on non-mirrored nodes.
    const auto tr = chord_particles({{{0.3, 0.1}, theta, 1.0}, {{-0.3, 0.1}, std::numbers::pi - theta, 1.0}}, 20, 200);
    const VisitIndex idx(tr);
    Lcg64 rng(1);
    const RuleConfig cfg{};
    const auto deposits = apply_rule(tr, idx, cfg, rng);
    CHECK(deposits == oracle::naive_deposits(tr, cfg));

    std::size_t on_axis = 0;
    for (std::size_t t = 0; t < tr[0].nodes.size(); ++t) {
        REQUIRE(tr[1].nodes[t] == mirror_y(tr[0].nodes[t]));
        if (tr[0].nodes[t].i == 0) ++on_axis;
    }
    // Every tick fires for both particles except where they meet on the axis.
    CHECK(deposits.size() == 2 * (tr[0].nodes.size() - on_axis));
}

TEST_CASE("apply_rule: probability zero deposits nothing and draws nothing") {
    const auto tr = chord_particles({{{0.3, 0.1}, 0.7, 1.0}, {{-0.3, 0.1}, std::numbers::pi - 0.7, 1.0}}, 25, 50);
    Lcg64 rng(5);
    RuleConfig cfg;
    cfg.probability = 0.0;
    CHECK(apply_rule(tr, VisitIndex(tr), cfg, rng).empty());
    CHECK(rng == Lcg64(5));
}

TEST_CASE("apply_rule: rng draw accounting") {
    Lcg64 gen(8);
    const auto tr = oracle::random_trajectories(gen, 3, 30, 10);
    const VisitIndex idx(tr);
    Lcg64 rng(5);
    apply_rule(tr, idx, RuleConfig{}, rng);
    CHECK(rng == Lcg64(5));

    RuleConfig half;
    half.probability = 0.5;
    Lcg64 draws(5);
    apply_rule(tr, idx, half, draws);
    Lcg64 expected(5);
    for (int k = 0; k < 3 * 31; ++k) expected.next_u64();
    CHECK(draws == expected);

    RuleConfig bad;
    bad.probability = 1.5;
    CHECK_THROWS_AS(apply_rule(tr, idx, bad, rng), InvalidParameter);
}

TEST_CASE("apply_rule agrees with the naive scan and never mutates trajectories") {
    Lcg64 gen(44);
    for (SymmetryKind kind : {SymmetryKind::MirrorY, SymmetryKind::FourFold}) {
        for (int n = 0; n < 4; ++n) {
            const auto tr = oracle::random_trajectories(gen, 3, 60, 10);
            const auto copy = tr;
            RuleConfig cfg;
            cfg.kind = kind;
            cfg.overrides[2] = SymmetryKind::MirrorY;
            Lcg64 rng(0);
            const auto deposits = apply_rule(tr, VisitIndex(tr), cfg, rng);
            CHECK(deposits == oracle::naive_deposits(tr, cfg));
            for (std::size_t k = 0; k < tr.size(); ++k) CHECK(tr[k].nodes == copy[k].nodes);

            // Every deposit is an actual visit of the named particle.
            for (const Deposit& d : deposits) {
                REQUIRE(tr[static_cast<std::size_t>(d.particle)].nodes[static_cast<std::size_t>(d.tick)] == d.node);
            }
        }
    }
}

TEST_CASE("deposit node sets are closed under the symmetry group") {
    for (SymmetryKind kind : {SymmetryKind::MirrorY, SymmetryKind::FourFold}) {
        for (std::uint64_t seed = 10; seed < 14; ++seed) {
            SimConfig cfg;
            cfg.seed = seed;
            cfg.T = 4;
            cfg.N = 8;
            cfg.D = 40;
            cfg.symmetry = kind;
            const auto nodes = deposit_nodes(simulate(cfg).deposits);
            CHECK_FALSE(nodes.empty());
            for (const GridIndex& g : nodes) {
                REQUIRE(nodes.contains({-g.i, g.j}));
                if (kind == SymmetryKind::FourFold) {
                    REQUIRE(nodes.contains({g.i, -g.j}));
                    REQUIRE(nodes.contains({-g.i, -g.j}));
                }
            }
        }
    }
}

TEST_CASE("mean NS does not decrease with rule probability") {
    double previous = -1.0;
    for (double p : {0.25, 0.5, 1.0}) {
        double mean = 0.0;
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            SimConfig cfg;
            cfg.seed = seed;
            cfg.T = 2;
            cfg.N = 6;
            cfg.D = 30;
            cfg.rule_probability = p;
            mean += static_cast<double>(simulate(cfg).deposits.size());
        }
        mean /= 10.0;
        CHECK(mean >= previous);
        previous = mean;
    }
}

TEST_CASE("causality guard") {
    CHECK(causality_guard(symmetry_rule_descriptor(SymmetryKind::MirrorY)) == GuardVerdict::Ok);
    CHECK(causality_guard(symmetry_rule_descriptor(SymmetryKind::FourFold)) == GuardVerdict::Ok);
    CHECK(causality_guard({false, true}) == GuardVerdict::Ok);
    CHECK(causality_guard({true, true}) == GuardVerdict::Rejected);
    CHECK(causality_guard({false, false}) == GuardVerdict::Ok);
}

} // TEST_SUITE
