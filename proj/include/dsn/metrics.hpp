#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "dsn/geometry.hpp"
#include "dsn/symmetry.hpp"

namespace dsn {

// Number of symmetrical particles: the deduplicated deposit count.
struct NsCount {
    std::uint64_t value = 0;
};

NsCount ns_count(std::span<const Deposit> deposits) noexcept;

inline constexpr int kDefaultBins = 50;

// Distances from the origin binned over [0, r]; the last bin is closed.
struct RadialHistogram {
    double bin_width = 0.0;
    std::vector<std::uint64_t> counts;

    std::uint64_t total() const noexcept;

    friend bool operator==(const RadialHistogram&, const RadialHistogram&) = default;
};

RadialHistogram radial_distribution(std::span<const Position> points, int bins, const Domain& dom);
RadialHistogram radial_distribution(std::span<const Deposit> deposits, int bins, const Lattice& lattice);

// CSV with header `bin_lo,bin_hi,count`.
void write_histogram_csv(std::ostream& out, const RadialHistogram& hist);

} // namespace dsn
