#pragma once

#include <array>
#include <compare>
#include <cstdint>

namespace dsn {

struct Position {
    double x = 0.0;
    double y = 0.0;

    friend constexpr bool operator==(const Position&, const Position&) = default;
};

// Unit heading vector.
struct Direction {
    double dx = 1.0;
    double dy = 0.0;

    static Direction from_angle(double theta);

    friend constexpr bool operator==(const Direction&, const Direction&) = default;
};

constexpr Position advance(Position p, Direction d, double length) noexcept {
    return {p.x + d.dx * length, p.y + d.dy * length};
}

constexpr double dot(Position p, Direction d) noexcept { return p.x * d.dx + p.y * d.dy; }

double norm(Position p) noexcept;
double distance(Position a, Position b) noexcept;

// Lattice node (i, j), located at (i / D, j / D).
struct GridIndex {
    std::int32_t i = 0;
    std::int32_t j = 0;

    friend constexpr auto operator<=>(const GridIndex&, const GridIndex&) = default;
};

constexpr GridIndex mirror_y(GridIndex g) noexcept { return {-g.i, g.j}; }

// Chebyshev (king-move) distance between two nodes.
std::int32_t chebyshev(GridIndex a, GridIndex b) noexcept;

// Circular reflecting domain centred on the origin.
struct Domain {
    double r = 1.0;

    bool contains(Position p) const noexcept;
};

// The eight switching directions, in their fixed index order, plus the
// stop action.
enum class Action : std::uint8_t { E = 0, NE, N, NW, W, SW, S, SE, Hold };

inline constexpr int kMoveCount = 8;

// Offset of each move, indexed by Action value 0..7.
inline constexpr std::array<GridIndex, kMoveCount> kMoveOffsets{{
    {1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1},
}};

// Candidate order used wherever actions compete on equal cost:
// Hold first, then E, NE, ..., SE.
inline constexpr std::array<Action, 9> kTieOrder{
    Action::Hold, Action::E, Action::NE, Action::N, Action::NW,
    Action::W,    Action::SW, Action::S, Action::SE,
};

GridIndex apply(GridIndex g, Action a) noexcept;

// Action taking `from` to `to`; throws InvalidInput if they are not adjacent.
Action action_between(GridIndex from, GridIndex to);

std::array<GridIndex, kMoveCount> neighbors8(GridIndex g) noexcept;

// An origin-centred lattice with D nodes per distance unit, clipped to a
// circular domain. Nodes with |node_position| <= r are valid.
class Lattice {
public:
    Lattice(int nodes_per_unit, Domain domain);

    int nodes_per_unit() const noexcept { return d_; }
    double spacing() const noexcept { return 1.0 / d_; }
    const Domain& domain() const noexcept { return domain_; }

    GridIndex snap(Position p) const noexcept;
    Position node_position(GridIndex g) const noexcept;
    bool contains(GridIndex g) const noexcept;

private:
    int d_;
    Domain domain_;
};

// Rounds p onto the lattice of scale D; halves round toward +infinity.
GridIndex snap(Position p, int nodes_per_unit);
Position node_position(GridIndex g, int nodes_per_unit);

// Specular reflection d - 2(d.n)n about the unit normal n, no preconditions.
Direction specular(Direction d, Direction normal) noexcept;

// Reflects an outward heading at a boundary point of the domain.
Direction reflect(Position on_boundary, Direction d, const Domain& dom);

struct BoundaryHit {
    double distance = 0.0; // travel length along the ray to the circle
    Position point;
};

// First forward intersection of the ray p + s d (s > 0) with the circle.
// p must lie inside or on the circle.
BoundaryHit next_boundary_hit(Position p, Direction d, const Domain& dom) noexcept;

} // namespace dsn
