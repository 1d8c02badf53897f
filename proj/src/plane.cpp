#include "homeo/plane.hpp"

#include <string>

#include "homeo/errors.hpp"

namespace homeo {

double canonical_angle(double theta) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double a = std::fmod(theta, two_pi);
    if (a < 0.0) a += two_pi;
    // fmod of a tiny negative angle can round back up to exactly 2*pi
    if (a >= two_pi) a = 0.0;
    return a;
}

PolarPoint to_polar(PlanePoint p) {
    const double r = p.norm();
    if (r == 0.0) return {0.0, 0.0};
    return {r, canonical_angle(std::atan2(p.y, p.x))};
}

PlanePoint from_polar(PolarPoint p) {
    return {p.r * std::cos(p.theta), p.r * std::sin(p.theta)};
}

ClosedDisc::ClosedDisc(PlanePoint center, double radius) : center_(center), radius_(radius) {
    if (!std::isfinite(center.x) || !std::isfinite(center.y) || !std::isfinite(radius)) {
        throw InvalidDisc("disc parameters must be finite");
    }
    if (!(radius > 0.0)) {
        throw InvalidDisc("disc radius must be positive (got " + std::to_string(radius) + ")");
    }
    if (!(center.norm() + radius < 1.0)) {
        throw InvalidDisc("disc must satisfy |center| + radius < 1 (got " +
                          std::to_string(center.norm() + radius) + ")");
    }
}

}  // namespace homeo
