#include "dsn/rng.hpp"

#include <cmath>
#include <numbers>

#include "dsn/error.hpp"

namespace dsn {

Position disk_point(double u_radius, double u_angle, double r) {
    const double rho = r * std::sqrt(u_radius);
    const double phi = 2.0 * std::numbers::pi * u_angle;
    return {rho * std::cos(phi), rho * std::sin(phi)};
}

Position sample_disk(Lcg64& rng, double r) {
    if (!(r > 0.0)) throw InvalidParameter("sample_disk: radius must be positive");
    const double u1 = rng.next_unit();
    const double u2 = rng.next_unit();
    return disk_point(u1, u2, r);
}

} // namespace dsn
