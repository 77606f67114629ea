#include "dsn/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string_view>

#include "dsn/error.hpp"

namespace dsn {

std::string format_real(double v) {
    // std::to_chars is locale-independent, unlike printf.
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 9);
    return std::string(buf, res.ptr);
}

void write_deposits_csv(std::ostream& out, std::span<const Deposit> deposits, const Lattice& lattice) {
    std::vector<Deposit> sorted(deposits.begin(), deposits.end());
    std::stable_sort(sorted.begin(), sorted.end(), canonical_less);
    out << "tick,particle,x,y,source\n";
    for (const Deposit& d : sorted) {
        const Position p = lattice.node_position(d.node);
        out << d.tick << ',' << d.particle << ',' << format_real(p.x) << ',' << format_real(p.y) << ','
            << to_string(d.source) << '\n';
    }
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        fields.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

template <typename T>
T field(std::string_view text, std::size_t row) {
    T out{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw InvalidInput("deposits csv: bad field '" + std::string(text) + "' on row " + std::to_string(row));
    }
    return out;
}

} // namespace

std::vector<DepositRecord> read_deposits_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw InvalidInput("deposits csv: missing header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "tick,particle,x,y,source") throw InvalidInput("deposits csv: unexpected header '" + line + "'");

    std::vector<DepositRecord> out;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto f = split_fields(line);
        if (f.size() != 5) throw InvalidInput("deposits csv: expected 5 fields on row " + std::to_string(row));
        DepositRecord rec;
        rec.tick = field<std::int32_t>(f[0], row);
        rec.particle = field<std::int32_t>(f[1], row);
        rec.pos = {field<double>(f[2], row), field<double>(f[3], row)};
        if (f[4] == "immediate") rec.source = DepositSource::Immediate;
        else if (f[4] == "scheduled") rec.source = DepositSource::Scheduled;
        else throw InvalidInput("deposits csv: bad source on row " + std::to_string(row));
        out.push_back(rec);
    }
    return out;
}

int pixel_column(double x, double r, int width) noexcept {
    return static_cast<int>(std::floor((x + r) / (2.0 * r) * (width - 1)));
}

int pixel_row(double y, double r, int width) noexcept {
    return static_cast<int>(std::floor((r - y) / (2.0 * r) * (width - 1)));
}

GrayImage render_points(std::span<const Position> points, int square, int width, double r) {
    if (width < 16) throw InvalidParameter("render: image width must be >= 16");
    if (square < 1) throw InvalidParameter("render: square size must be >= 1");
    if (!(r > 0.0)) throw InvalidParameter("render: radius must be positive");
    GrayImage img(width, width);
    const int lo_off = (square - 1) / 2;
    for (const Position& p : points) {
        const int cx = pixel_column(p.x, r, width);
        const int cy = pixel_row(p.y, r, width);
        const int x0 = std::max(0, cx - lo_off);
        const int x1 = std::min(width - 1, cx - lo_off + square - 1);
        const int y0 = std::max(0, cy - lo_off);
        const int y1 = std::min(width - 1, cy - lo_off + square - 1);
        for (int y = y0; y <= y1; ++y) {
            for (int x = x0; x <= x1; ++x) img.at(x, y) = 255;
        }
    }
    return img;
}

void write_pgm(std::ostream& out, const GrayImage& image) {
    out << "P2\n" << image.width << ' ' << image.height << "\n255\n";
    std::string line;
    for (int y = 0; y < image.height; ++y) {
        line.clear();
        for (int x = 0; x < image.width; ++x) {
            const std::string v = std::to_string(image.at(x, y));
            if (!line.empty() && line.size() + 1 + v.size() > 70) {
                out << line << '\n';
                line.clear();
            }
            if (!line.empty()) line += ' ';
            line += v;
        }
        out << line << '\n';
    }
}

} // namespace dsn
