#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dsn/config.hpp"
#include "dsn/dynamics.hpp"
#include "dsn/io.hpp"
#include "dsn/metrics.hpp"
#include "dsn/symmetry.hpp"

namespace dsn {

// Samples N particles in id order. Each particle consumes three draws
// (position radius, position angle, heading) even when its initial
// conditions are overridden, so overrides never shift other particles.
std::vector<Particle> make_particles(const SimConfig& cfg, Lcg64& rng);

struct SimulationResult {
    Lattice lattice;
    std::int64_t ticks = 0;
    std::vector<Particle> particles;
    std::vector<Trajectory> trajectories;
    std::vector<Deposit> deposits;
};

// Full in-memory pipeline: particles, ideal paths, lattice trajectories,
// visit index, rule application. Single-threaded and deterministic.
SimulationResult simulate(const SimConfig& cfg);

GrayImage render(std::span<const Deposit> deposits, const Lattice& lattice, const SimConfig& cfg);

struct RunSummary {
    std::uint64_t ns = 0;
    std::int64_t ticks = 0;
    double wall_ms = 0.0;
};

// Runs one simulation and writes deposits.csv, histogram.csv, pattern.pgm and
// summary.json into out_dir. Files depend only on cfg.
RunSummary run(const SimConfig& cfg, const std::filesystem::path& out_dir);

struct SweepRow {
    std::string param;
    std::uint64_t seed = 0;
    std::uint64_t ns = 0;
    std::optional<double> min_radius;
    std::optional<double> max_radius;
    double wall_ms = 0.0;
};

// Cross product of `values` (outer) and `seeds` (inner). Runs may execute on
// up to `jobs` threads; row order never depends on scheduling.
std::vector<SweepRow> sweep(const SimConfig& base, const std::string& key, const std::vector<std::string>& values,
                            const std::vector<std::uint64_t>& seeds, unsigned jobs = 1);

// CSV with header `param,seed,NS,min_radius,max_radius,wall_ms`.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

} // namespace dsn
