#pragma once

#include <cmath>
#include <numbers>

namespace homeo {

/// Slack allowed when testing membership of the closed unit disc/ball.
inline constexpr double kUnitSlack = 1e-12;

/// A point of the plane; map evaluation expects it inside the closed unit disc.
struct PlanePoint {
    double x = 0.0;
    double y = 0.0;

    constexpr double pr1() const { return x; }
    constexpr double pr2() const { return y; }

    double norm() const { return std::hypot(x, y); }

    friend constexpr PlanePoint operator+(PlanePoint a, PlanePoint b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr PlanePoint operator-(PlanePoint a, PlanePoint b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr PlanePoint operator*(double k, PlanePoint a) { return {k * a.x, k * a.y}; }
    friend constexpr bool operator==(PlanePoint, PlanePoint) = default;
};

inline double distance(PlanePoint a, PlanePoint b) { return (a - b).norm(); }

/// Polar form with theta canonicalized to [0, 2*pi). The origin has theta = 0.
struct PolarPoint {
    double r = 0.0;
    double theta = 0.0;
};

/// Maps any finite angle into [0, 2*pi).
double canonical_angle(double theta);

PolarPoint to_polar(PlanePoint p);
PlanePoint from_polar(PolarPoint p);

/// Rotation about the origin by `angle` radians.
inline PlanePoint rotate(PlanePoint p, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

/// Closed disc D(center; radius) with closure inside the open unit disc.
class ClosedDisc {
public:
    /// Throws InvalidDisc unless radius > 0 and |center| + radius < 1.
    ClosedDisc(PlanePoint center, double radius);

    PlanePoint center() const { return center_; }
    double radius() const { return radius_; }

    /// Largest distance from the origin to a point of the disc.
    double outer_radius() const { return center_.norm() + radius_; }

    bool contains(PlanePoint p, double slack = 0.0) const {
        return distance(p, center_) <= radius_ + slack;
    }

private:
    PlanePoint center_;
    double radius_;
};

}  // namespace homeo
