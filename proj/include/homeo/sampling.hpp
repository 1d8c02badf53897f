#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <variant>
#include <vector>

#include "homeo/plane.hpp"

namespace homeo {

/// Seeded generator. The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard; the real-valued conversions below are done here rather than through
/// <random> distributions so sample streams are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller (the sine branch is discarded).
    double normal();

private:
    std::mt19937_64 engine_;
};

/// Uniform over the closed unit disc (radius = sqrt(U)).
struct DiscUniform {};

/// Evenly spaced points on a circle, starting at a seeded random phase.
struct Circle {
    double radius = 1.0;
    PlanePoint center{};
};

/// Uniform over the closed unit ball of R^q (Gaussian direction, radius = U^(1/q)).
struct BallUniform {
    int q = 2;
};

/// Uniform on the unit sphere of R^q.
struct Sphere {
    int q = 2;
};

/// n evenly spaced points s_k = k / (n - 1) along the first coordinate axis of R^q.
/// The sup estimator refines around the grid argmax on this region.
struct RadialGrid {
    int q = 2;
};

using Region = std::variant<DiscUniform, Circle, BallUniform, Sphere, RadialGrid>;

struct SampleSpec {
    std::uint64_t seed = 0;
    std::size_t n = 0;
    Region region = DiscUniform{};
};

/// Flat row-major sample storage.
struct SampleSet {
    std::size_t dim = 0;
    std::vector<double> coords;

    std::size_t size() const { return dim == 0 ? 0 : coords.size() / dim; }
    std::span<const double> point(std::size_t i) const { return {coords.data() + i * dim, dim}; }
    PlanePoint plane(std::size_t i) const { return {coords[i * dim], coords[i * dim + 1]}; }
};

std::size_t region_dim(const Region& region);

/// Throws InvalidSpec for n == 0, q < 1, or a non-positive circle radius.
SampleSet generate(const SampleSpec& spec);

/// Convenience: the samples of a two-dimensional spec as plane points.
std::vector<PlanePoint> generate_plane(const SampleSpec& spec);

}  // namespace homeo
