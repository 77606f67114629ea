#include "dsn/verify.hpp"

#include <cstdio>
#include <set>
#include <sstream>

#include "dsn/config.hpp"
#include "dsn/io.hpp"
#include "dsn/oracles.hpp"
#include "dsn/quantizer.hpp"
#include "dsn/simulation.hpp"

namespace dsn {

namespace {

std::string serialize(const oracle::QuantizerInstance& inst) {
    std::ostringstream os;
    char buf[64];
    os << "D=" << inst.D << " start=(" << inst.start.i << ',' << inst.start.j << ") f=[";
    for (std::size_t t = 0; t < inst.f.size(); ++t) {
        std::snprintf(buf, sizeof buf, "%s(%.17g,%.17g)", t ? "," : "", inst.f[t].x, inst.f[t].y);
        os << buf;
    }
    os << ']';
    return os.str();
}

void check_quantizers(VerifyReport& rep) {
    Lcg64 rng(20240601);
    int failures = 0;
    constexpr int kInstances = 50;
    for (int n = 0; n < kInstances; ++n) {
        const int d = n % 2 == 0 ? 4 : 8;
        const std::size_t k = 1 + static_cast<std::size_t>(n % 6);
        const auto inst = oracle::random_quantizer_instance(rng, d, k);
        const Lattice lattice(d, Domain{1.0});
        const double brute = plan_cost(brute_force_quantize(inst.f, inst.start, lattice), inst.f, lattice);
        const double opt = plan_cost(optimal_quantize(inst.f, inst.start, lattice, 4), inst.f, lattice);
        const double greedy = plan_cost(greedy_quantize(inst.f, inst.start, lattice), inst.f, lattice);
        if (brute != opt || greedy < opt) {
            ++failures;
            char buf[128];
            std::snprintf(buf, sizeof buf, "  FAIL brute=%.17g optimal=%.17g greedy=%.17g ", brute, opt, greedy);
            rep.lines.push_back(buf + serialize(inst));
        }
    }
    rep.lines.push_back("quantizer sandwich (brute == optimal <= greedy), " + std::to_string(kInstances) +
                        " instances: " + (failures ? "FAIL" : "ok"));
    rep.ok = rep.ok && failures == 0;
}

void check_matcher(VerifyReport& rep) {
    Lcg64 rng(77);
    int failures = 0;
    constexpr int kInstances = 10;
    for (int n = 0; n < kInstances; ++n) {
        const auto trajectories = oracle::random_trajectories(rng, 3, 20 + 4 * n, 10);
        const VisitIndex index(trajectories);
        for (SymmetryKind kind : {SymmetryKind::MirrorY, SymmetryKind::FourFold}) {
            for (const Trajectory& tr : trajectories) {
                for (std::size_t t = 0; t < tr.nodes.size(); ++t) {
                    const auto tick = static_cast<std::int32_t>(t);
                    if (find_match(tr.particle, tick, tr.nodes[t], index, kind) !=
                        oracle::naive_find_match(trajectories, tr.particle, tick, kind)) {
                        ++failures;
                        rep.lines.push_back("  FAIL instance " + std::to_string(n) + " particle " +
                                            std::to_string(tr.particle) + " tick " + std::to_string(t) + " kind " +
                                            std::string(to_string(kind)));
                    }
                }
            }
        }
    }
    rep.lines.push_back("indexed vs naive matcher, " + std::to_string(kInstances) +
                        " instances: " + (failures ? "FAIL" : "ok"));
    rep.ok = rep.ok && failures == 0;
}

void check_closure(VerifyReport& rep) {
    int failures = 0;
    for (SymmetryKind kind : {SymmetryKind::MirrorY, SymmetryKind::FourFold}) {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            SimConfig cfg;
            cfg.seed = seed;
            cfg.T = 5;
            cfg.N = 6;
            cfg.D = 30;
            cfg.symmetry = kind;
            const SimulationResult res = simulate(cfg);
            std::set<GridIndex> nodes;
            for (const Deposit& d : res.deposits) nodes.insert(d.node);
            bool closed = true;
            for (const GridIndex& g : nodes) {
                closed = closed && nodes.contains({-g.i, g.j});
                if (kind == SymmetryKind::FourFold) {
                    closed = closed && nodes.contains({g.i, -g.j}) && nodes.contains({-g.i, -g.j});
                }
            }
            if (!closed) {
                ++failures;
                rep.lines.push_back("  FAIL closure kind " + std::string(to_string(kind)) + " seed " +
                                    std::to_string(seed));
            }
        }
    }
    rep.lines.push_back(std::string("deposit closure under the symmetry group, 10 runs: ") +
                        (failures ? "FAIL" : "ok"));
    rep.ok = rep.ok && failures == 0;
}

} // namespace

std::string VerifyReport::text() const {
    std::string out;
    for (const std::string& l : lines) out += l + '\n';
    out += ok ? "verify: all checks passed\n" : "verify: FAILED\n";
    return out;
}

VerifyReport verify() {
    VerifyReport rep;
    check_quantizers(rep);
    check_matcher(rep);
    check_closure(rep);
    return rep;
}

} // namespace dsn
