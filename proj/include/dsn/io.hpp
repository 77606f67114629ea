#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dsn/geometry.hpp"
#include "dsn/symmetry.hpp"

namespace dsn {

// 9 significant digits, '.' separator, independent of the global locale.
std::string format_real(double v);

// Deposits CSV: header `tick,particle,x,y,source`, rows in canonical order.
void write_deposits_csv(std::ostream& out, std::span<const Deposit> deposits, const Lattice& lattice);

struct DepositRecord {
    std::int32_t tick = 0;
    std::int32_t particle = 0;
    Position pos;
    DepositSource source = DepositSource::Immediate;
};

// Throws InvalidInput on a malformed header or row.
std::vector<DepositRecord> read_deposits_csv(std::istream& in);

// 8-bit grey raster, row-major, row 0 at the top.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    GrayImage() = default;
    GrayImage(int w, int h) : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, 0) {}

    std::uint8_t& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }

    friend bool operator==(const GrayImage&, const GrayImage&) = default;
};

// Pixel column/row of a point in a W x W raster covering [-r, r]^2.
int pixel_column(double x, double r, int width) noexcept;
int pixel_row(double y, double r, int width) noexcept;

// Draws each point as a filled square x square block of value 255 on a black
// W x W canvas; blocks are clipped at the image border.
GrayImage render_points(std::span<const Position> points, int square, int width, double r);

// Plain (P2) PGM, maxval 255, lines no longer than 70 characters.
void write_pgm(std::ostream& out, const GrayImage& image);

} // namespace dsn
