// dsn: command-line driver for the dynamic switching network simulator.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "dsn/config.hpp"
#include "dsn/error.hpp"
#include "dsn/io.hpp"
#include "dsn/metrics.hpp"
#include "dsn/simulation.hpp"
#include "dsn/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitOracle = 2;

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::vector<dsn::DepositRecord> load_deposits(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return dsn::read_deposits_csv(in);
}

std::vector<dsn::Position> positions_of(const std::vector<dsn::DepositRecord>& records) {
    std::vector<dsn::Position> out;
    out.reserve(records.size());
    for (const auto& r : records) out.push_back(r.pos);
    return out;
}

void print_summary(const dsn::SimConfig& cfg, const dsn::RunSummary& s) {
    std::printf("NS=%llu K=%lld N=%d D=%d seed=%llu wall_ms=%.1f\n", static_cast<unsigned long long>(s.ns),
                static_cast<long long>(s.ticks), cfg.N, cfg.D, static_cast<unsigned long long>(cfg.seed),
                s.wall_ms);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dynamic switching network simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;

    auto* run_cmd = app.add_subcommand("run", "Run one simulation and write its artifacts");
    run_cmd->add_option("config", config_path, "Config file")->required();
    run_cmd->add_option("-o,--out", out_path, "Output directory")->required();

    std::string vary;
    std::string seeds_text;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    auto* sweep_cmd = app.add_subcommand("sweep", "Run a parameter sweep and write sweep.csv");
    sweep_cmd->add_option("config", config_path, "Base config file")->required();
    sweep_cmd->add_option("--vary", vary, "key=v1,v2,...")->required();
    sweep_cmd->add_option("--seeds", seeds_text, "s1,s2,...")->required();
    sweep_cmd->add_option("-o,--out", out_path, "Output directory")->required();
    sweep_cmd->add_option("-j,--jobs", jobs, "Concurrent runs");

    std::string deposits_path;
    auto* render_cmd = app.add_subcommand("render", "Render a deposits CSV as a plain PGM");
    render_cmd->add_option("deposits", deposits_path, "Deposits CSV")->required();
    render_cmd->add_option("config", config_path, "Config file")->required();
    render_cmd->add_option("-o,--out", out_path, "Output .pgm file")->required();

    int bins = 50;
    double radius = 1.0;
    auto* stats_cmd = app.add_subcommand("stats", "Radial histogram of a deposits CSV");
    stats_cmd->add_option("deposits", deposits_path, "Deposits CSV")->required();
    stats_cmd->add_option("--bins", bins, "Number of bins");
    stats_cmd->add_option("--radius", radius, "Domain radius");

    auto* verify_cmd = app.add_subcommand("verify", "Run the seed-pinned oracle self-check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (*run_cmd) {
            const dsn::SimConfig cfg = dsn::load_config(config_path);
            print_summary(cfg, dsn::run(cfg, out_path));
        } else if (*sweep_cmd) {
            const dsn::SimConfig cfg = dsn::load_config(config_path);
            const auto eq = vary.find('=');
            if (eq == std::string::npos) throw dsn::InvalidInput("--vary expects key=v1,v2,...");
            std::vector<std::uint64_t> seeds;
            for (const std::string& s : split_list(seeds_text)) seeds.push_back(std::stoull(s));
            const auto rows = dsn::sweep(cfg, vary.substr(0, eq), split_list(vary.substr(eq + 1)), seeds, jobs);
            std::filesystem::create_directories(out_path);
            std::ofstream out(std::filesystem::path(out_path) / "sweep.csv", std::ios::binary);
            dsn::write_sweep_csv(out, rows);
            dsn::write_sweep_csv(std::cout, rows);
        } else if (*render_cmd) {
            const dsn::SimConfig cfg = dsn::load_config(config_path);
            const auto points = positions_of(load_deposits(deposits_path));
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
            dsn::write_pgm(out, dsn::render_points(points, cfg.S, cfg.image_width, cfg.r));
        } else if (*stats_cmd) {
            const auto records = load_deposits(deposits_path);
            const auto hist = dsn::radial_distribution(positions_of(records), bins, dsn::Domain{radius});
            dsn::write_histogram_csv(std::cout, hist);
            std::fprintf(stderr, "NS=%zu\n", records.size());
        } else if (*verify_cmd) {
            const dsn::VerifyReport rep = dsn::verify();
            std::fputs(rep.text().c_str(), stdout);
            return rep.ok ? kExitOk : kExitOracle;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    }
    return kExitOk;
}
