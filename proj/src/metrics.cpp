#include "dsn/metrics.hpp"

#include <cmath>
#include <numeric>
#include <ostream>

#include "dsn/error.hpp"
#include "dsn/io.hpp"

namespace dsn {

NsCount ns_count(std::span<const Deposit> deposits) noexcept { return {deposits.size()}; }

std::uint64_t RadialHistogram::total() const noexcept {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

RadialHistogram radial_distribution(std::span<const Position> points, int bins, const Domain& dom) {
    if (bins < 1) throw InvalidParameter("radial_distribution: bins must be >= 1");
    if (!(dom.r > 0.0)) throw InvalidParameter("radial_distribution: radius must be positive");
    RadialHistogram hist{dom.r / bins, std::vector<std::uint64_t>(static_cast<std::size_t>(bins), 0)};
    for (const Position& p : points) {
        const double b = std::floor(norm(p) / hist.bin_width);
        const auto k = b >= bins - 1 ? static_cast<std::size_t>(bins - 1) : static_cast<std::size_t>(b);
        ++hist.counts[k];
    }
    return hist;
}

RadialHistogram radial_distribution(std::span<const Deposit> deposits, int bins, const Lattice& lattice) {
    std::vector<Position> points;
    points.reserve(deposits.size());
    for (const Deposit& d : deposits) points.push_back(lattice.node_position(d.node));
    return radial_distribution(points, bins, lattice.domain());
}

void write_histogram_csv(std::ostream& out, const RadialHistogram& hist) {
    out << "bin_lo,bin_hi,count\n";
    for (std::size_t k = 0; k < hist.counts.size(); ++k) {
        out << format_real(static_cast<double>(k) * hist.bin_width) << ','
            << format_real(static_cast<double>(k + 1) * hist.bin_width) << ',' << hist.counts[k] << '\n';
    }
}

} // namespace dsn
