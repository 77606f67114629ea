#include "dsn/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "dsn/error.hpp"

namespace dsn {

namespace {

constexpr double kBoundaryTolerance = 1e-9;

std::int32_t round_half_up(double v) {
    const double lower = std::floor(v);
    const double frac = v - lower; // exact for |v| < 2^52
    return static_cast<std::int32_t>(frac >= 0.5 ? lower + 1.0 : lower);
}

} // namespace

Direction Direction::from_angle(double theta) { return {std::cos(theta), std::sin(theta)}; }

double norm(Position p) noexcept { return std::hypot(p.x, p.y); }

double distance(Position a, Position b) noexcept { return std::hypot(a.x - b.x, a.y - b.y); }

std::int32_t chebyshev(GridIndex a, GridIndex b) noexcept {
    return std::max(std::abs(a.i - b.i), std::abs(a.j - b.j));
}

bool Domain::contains(Position p) const noexcept { return p.x * p.x + p.y * p.y <= r * r; }

GridIndex apply(GridIndex g, Action a) noexcept {
    if (a == Action::Hold) return g;
    const GridIndex off = kMoveOffsets[static_cast<std::size_t>(a)];
    return {g.i + off.i, g.j + off.j};
}

Action action_between(GridIndex from, GridIndex to) {
    const GridIndex delta{to.i - from.i, to.j - from.j};
    if (delta.i == 0 && delta.j == 0) return Action::Hold;
    for (int k = 0; k < kMoveCount; ++k) {
        if (kMoveOffsets[k] == delta) return static_cast<Action>(k);
    }
    throw InvalidInput("nodes are not lattice neighbours");
}

std::array<GridIndex, kMoveCount> neighbors8(GridIndex g) noexcept {
    std::array<GridIndex, kMoveCount> out{};
    for (int k = 0; k < kMoveCount; ++k) out[k] = apply(g, static_cast<Action>(k));
    return out;
}

GridIndex snap(Position p, int nodes_per_unit) {
    if (nodes_per_unit < 1) throw InvalidParameter("snap: D must be >= 1");
    return {round_half_up(p.x * nodes_per_unit), round_half_up(p.y * nodes_per_unit)};
}

Position node_position(GridIndex g, int nodes_per_unit) {
    if (nodes_per_unit < 1) throw InvalidParameter("node_position: D must be >= 1");
    const double d = nodes_per_unit;
    return {g.i / d, g.j / d};
}

Lattice::Lattice(int nodes_per_unit, Domain domain) : d_(nodes_per_unit), domain_(domain) {
    if (nodes_per_unit < 1) throw InvalidParameter("lattice: D must be >= 1");
    if (!(domain.r > 0.0)) throw InvalidParameter("lattice: radius must be positive");
}

GridIndex Lattice::snap(Position p) const noexcept {
    return {round_half_up(p.x * d_), round_half_up(p.y * d_)};
}

Position Lattice::node_position(GridIndex g) const noexcept {
    const double d = d_;
    return {g.i / d, g.j / d};
}

bool Lattice::contains(GridIndex g) const noexcept { return domain_.contains(node_position(g)); }

Direction specular(Direction d, Direction n) noexcept {
    const double k = 2.0 * (d.dx * n.dx + d.dy * n.dy);
    return {d.dx - k * n.dx, d.dy - k * n.dy};
}

Direction reflect(Position pos, Direction d, const Domain& dom) {
    const double len = norm(pos);
    if (len == 0.0) throw PreconditionError("reflect: degenerate normal at the origin");
    if (std::abs(len - dom.r) > kBoundaryTolerance) {
        throw PreconditionError("reflect: position is not on the boundary");
    }
    if (!(dot(pos, d) > 0.0)) throw PreconditionError("reflect: heading does not point outward");
    Direction out = specular(d, {pos.x / len, pos.y / len});
    // Renormalise so rounding cannot accumulate over many bounces.
    const double m = std::hypot(out.dx, out.dy);
    return {out.dx / m, out.dy / m};
}

BoundaryHit next_boundary_hit(Position p, Direction d, const Domain& dom) noexcept {
    // |p + s d|^2 = r^2  ->  s^2 + 2 b s + c = 0
    const double b = dot(p, d);
    const double c = p.x * p.x + p.y * p.y - dom.r * dom.r;
    const double root = std::sqrt(std::max(0.0, b * b - c));
    double s = 0.0;
    if (b > 0.0) {
        const double denom = b + root;
        s = denom > 0.0 ? -c / denom : 0.0;
    } else {
        s = root - b;
    }
    s = std::max(0.0, s);
    return {s, advance(p, d, s)};
}

} // namespace dsn
