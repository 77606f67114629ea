#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "dsn/error.hpp"
#include "dsn/metrics.hpp"
#include "dsn/simulation.hpp"

using namespace dsn;

TEST_SUITE("metrics") {

TEST_CASE("ns_count") {
    CHECK(ns_count(std::vector<Deposit>{}).value == 0);
    const std::vector<Deposit> three{{{1, 0}, 0, 0, DepositSource::Immediate},
                                     {{-1, 0}, 0, 1, DepositSource::Scheduled},
                                     {{2, 0}, 1, 0, DepositSource::Immediate}};
    CHECK(ns_count(three).value == 3);
}

TEST_CASE("radial_distribution bins") {
    const Domain dom{1.0};
    RadialHistogram h = radial_distribution(std::vector<Position>{{0.0, 0.0}}, 10, dom);
    CHECK(h.counts[0] == 1);
    CHECK(h.bin_width == doctest::Approx(0.1));

    h = radial_distribution(std::vector<Position>{{0.5, 0.0}}, 10, dom);
    CHECK(h.counts[5] == 1);

    // The outer edge belongs to the last bin.
    h = radial_distribution(std::vector<Position>{{0.0, 1.0}}, 10, dom);
    CHECK(h.counts[9] == 1);

    CHECK_THROWS_AS(radial_distribution(std::vector<Position>{}, 0, dom), InvalidParameter);
}

TEST_CASE("a ring of deposits lands in a single bin") {
    const Lattice lat(200, Domain{1.0});
    std::vector<Deposit> ring;
    for (int k = 0; k < 360; ++k) {
        const double a = 2.0 * std::numbers::pi * k / 360.0;
        ring.push_back({lat.snap({0.63 * std::cos(a), 0.63 * std::sin(a)}), k, 0, DepositSource::Immediate});
    }
    const RadialHistogram h = radial_distribution(ring, 50, lat);
    int nonzero = 0;
    for (auto c : h.counts) nonzero += c != 0;
    CHECK(nonzero == 1);
    CHECK(h.counts[31] == 360);
}

TEST_CASE("histogram total, range and mirror invariance on a simulated pattern") {
    SimConfig cfg;
    cfg.seed = 3;
    cfg.T = 5;
    cfg.N = 8;
    cfg.D = 40;
    const SimulationResult res = simulate(cfg);
    const RadialHistogram h = radial_distribution(res.deposits, 50, res.lattice);
    CHECK(h.total() == ns_count(res.deposits).value);
    for (const Deposit& d : res.deposits) CHECK(norm(res.lattice.node_position(d.node)) <= cfg.r);

    std::vector<Deposit> mirrored = res.deposits;
    for (Deposit& d : mirrored) d.node = mirror_y(d.node);
    CHECK(radial_distribution(mirrored, 50, res.lattice) == h);
}

TEST_CASE("histogram csv") {
    RadialHistogram h{0.5, {3, 0}};
    std::ostringstream out;
    write_histogram_csv(out, h);
    CHECK(out.str() == "bin_lo,bin_hi,count\n0,0.5,3\n0.5,1,0\n");
}

} // TEST_SUITE
