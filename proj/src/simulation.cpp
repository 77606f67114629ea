#include "dsn/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "dsn/error.hpp"

namespace dsn {

namespace {

void apply_override(MovementEquation& eq, const InitialOverride& o) {
    if (o.x0) eq.p0.x = *o.x0;
    if (o.y0) eq.p0.y = *o.y0;
    if (o.theta0) eq.theta0 = *o.theta0;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    return out;
}

} // namespace

std::vector<Particle> make_particles(const SimConfig& cfg, Lcg64& rng) {
    std::vector<Particle> particles;
    particles.reserve(static_cast<std::size_t>(cfg.N));
    for (int id = 0; id < cfg.N; ++id) {
        Particle p{id, {}};
        p.eq.p0 = sample_disk(rng, cfg.r);
        p.eq.theta0 = 2.0 * std::numbers::pi * rng.next_unit();
        p.eq.v = cfg.v;
        apply_override(p.eq, cfg.initial);
        if (const auto it = cfg.per_particle.find(id); it != cfg.per_particle.end()) apply_override(p.eq, it->second);
        if (!(p.eq.p0.x * p.eq.p0.x + p.eq.p0.y * p.eq.p0.y < cfg.r * cfg.r)) {
            throw Infeasible("particle " + std::to_string(id) + " starts outside the domain");
        }
        particles.push_back(p);
    }
    return particles;
}

SimulationResult simulate(const SimConfig& cfg) {
    validate_config(cfg);
    SimulationResult res{Lattice(cfg.D, Domain{cfg.r}), 0, {}, {}, {}};
    res.ticks = tick_count(cfg.T, cfg.D, cfg.v);
    const double dt = tick_duration(cfg.D, cfg.v);

    Lcg64 rng(cfg.seed);
    res.particles = make_particles(cfg, rng);

    res.trajectories.reserve(res.particles.size());
    for (const Particle& p : res.particles) {
        const std::vector<Position> path = ideal_path(p.eq, res.lattice.domain(), res.ticks, dt);
        res.trajectories.push_back(quantize_trajectory(p.id, path, start_node(p.eq.p0, res.lattice), res.lattice));
    }

    const VisitIndex index(res.trajectories);
    res.deposits = apply_rule(res.trajectories, index, cfg.rule_config(), rng);
    return res;
}

GrayImage render(std::span<const Deposit> deposits, const Lattice& lattice, const SimConfig& cfg) {
    std::vector<Deposit> sorted(deposits.begin(), deposits.end());
    std::stable_sort(sorted.begin(), sorted.end(), canonical_less);
    std::vector<Position> points;
    points.reserve(sorted.size());
    for (const Deposit& d : sorted) points.push_back(lattice.node_position(d.node));
    return render_points(points, cfg.S, cfg.image_width, cfg.r);
}

RunSummary run(const SimConfig& cfg, const std::filesystem::path& out_dir) {
    const auto started = std::chrono::steady_clock::now();
    const SimulationResult res = simulate(cfg);

    std::filesystem::create_directories(out_dir);
    {
        auto out = open_output(out_dir / "deposits.csv");
        write_deposits_csv(out, res.deposits, res.lattice);
    }
    {
        auto out = open_output(out_dir / "histogram.csv");
        write_histogram_csv(out, radial_distribution(res.deposits, cfg.bins, res.lattice));
    }
    {
        auto out = open_output(out_dir / "pattern.pgm");
        write_pgm(out, render(res.deposits, res.lattice, cfg));
    }

    RunSummary summary;
    summary.ns = ns_count(res.deposits).value;
    summary.ticks = res.ticks;
    {
        nlohmann::ordered_json j;
        j["NS"] = summary.ns;
        j["K"] = summary.ticks;
        j["N"] = cfg.N;
        j["D"] = cfg.D;
        j["T"] = cfg.T;
        j["S"] = cfg.S;
        j["seed"] = cfg.seed;
        j["symmetry"] = std::string(to_string(cfg.symmetry));
        auto out = open_output(out_dir / "summary.json");
        out << j.dump(2) << '\n';
    }
    summary.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return summary;
}

std::vector<SweepRow> sweep(const SimConfig& base, const std::string& key, const std::vector<std::string>& values,
                            const std::vector<std::uint64_t>& seeds, unsigned jobs) {
    std::vector<SimConfig> configs;
    std::vector<SweepRow> rows;
    for (const std::string& value : values) {
        SimConfig cfg = base;
        set_config_value(cfg, key, value);
        validate_config(cfg);
        for (std::uint64_t seed : seeds) {
            cfg.seed = seed;
            configs.push_back(cfg);
            rows.push_back({value, seed, 0, std::nullopt, std::nullopt, 0.0});
        }
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(configs.size());
    auto worker = [&] {
        for (std::size_t k = next++; k < configs.size(); k = next++) {
            try {
                const auto started = std::chrono::steady_clock::now();
                const SimulationResult res = simulate(configs[k]);
                SweepRow& row = rows[k];
                row.ns = ns_count(res.deposits).value;
                for (const Deposit& d : res.deposits) {
                    const double rad = norm(res.lattice.node_position(d.node));
                    row.min_radius = row.min_radius ? std::min(*row.min_radius, rad) : rad;
                    row.max_radius = row.max_radius ? std::max(*row.max_radius, rad) : rad;
                }
                row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
                                  .count();
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(configs.size())));
        for (unsigned w = 0; w < n; ++w) pool.emplace_back(worker);
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "param,seed,NS,min_radius,max_radius,wall_ms\n";
    for (const SweepRow& row : rows) {
        out << row.param << ',' << row.seed << ',' << row.ns << ','
            << (row.min_radius ? format_real(*row.min_radius) : "") << ','
            << (row.max_radius ? format_real(*row.max_radius) : "") << ',' << format_real(row.wall_ms) << '\n';
    }
}

} // namespace dsn
