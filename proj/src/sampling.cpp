#include "homeo/sampling.hpp"

#include <cmath>
#include <numbers>

#include "homeo/errors.hpp"

namespace homeo {

double Rng::normal() {
    // 1 - U lies in (0, 1], keeping the logarithm finite
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::size_t region_dim(const Region& region) {
    return std::visit(
        [](const auto& r) -> std::size_t {
            using R = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<R, DiscUniform> || std::is_same_v<R, Circle>) {
                return 2;
            } else {
                return r.q < 1 ? 0 : static_cast<std::size_t>(r.q);
            }
        },
        region);
}

namespace {

void gaussian_direction(Rng& rng, std::span<double> out) {
    for (;;) {
        double norm2 = 0.0;
        for (double& c : out) {
            c = rng.normal();
            norm2 += c * c;
        }
        if (norm2 > 1e-300) {
            const double inv = 1.0 / std::sqrt(norm2);
            for (double& c : out) c *= inv;
            return;
        }
    }
}

}  // namespace

SampleSet generate(const SampleSpec& spec) {
    if (spec.n == 0) throw InvalidSpec("sample count must be positive");
    const std::size_t dim = region_dim(spec.region);
    if (dim == 0) throw InvalidSpec("sample dimension must be at least 1");

    SampleSet set;
    set.dim = dim;
    set.coords.assign(spec.n * dim, 0.0);
    Rng rng(spec.seed);

    std::visit(
        [&](const auto& r) {
            using R = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<R, DiscUniform>) {
                for (std::size_t i = 0; i < spec.n; ++i) {
                    const double rad = std::sqrt(rng.uniform());
                    const double ang = 2.0 * std::numbers::pi * rng.uniform();
                    set.coords[2 * i] = rad * std::cos(ang);
                    set.coords[2 * i + 1] = rad * std::sin(ang);
                }
            } else if constexpr (std::is_same_v<R, Circle>) {
                if (!(r.radius > 0.0)) throw InvalidSpec("circle radius must be positive");
                const double phase = 2.0 * std::numbers::pi * rng.uniform();
                const double step = 2.0 * std::numbers::pi / static_cast<double>(spec.n);
                for (std::size_t i = 0; i < spec.n; ++i) {
                    const double ang = phase + step * static_cast<double>(i);
                    set.coords[2 * i] = r.center.x + r.radius * std::cos(ang);
                    set.coords[2 * i + 1] = r.center.y + r.radius * std::sin(ang);
                }
            } else if constexpr (std::is_same_v<R, BallUniform>) {
                const double inv_q = 1.0 / static_cast<double>(dim);
                for (std::size_t i = 0; i < spec.n; ++i) {
                    std::span<double> p(set.coords.data() + i * dim, dim);
                    gaussian_direction(rng, p);
                    const double rad = std::pow(rng.uniform(), inv_q);
                    for (double& c : p) c *= rad;
                }
            } else if constexpr (std::is_same_v<R, Sphere>) {
                for (std::size_t i = 0; i < spec.n; ++i) {
                    gaussian_direction(rng, {set.coords.data() + i * dim, dim});
                }
            } else {
                const double denom = spec.n > 1 ? static_cast<double>(spec.n - 1) : 1.0;
                for (std::size_t i = 0; i < spec.n; ++i) {
                    set.coords[i * dim] = static_cast<double>(i) / denom;
                }
            }
        },
        spec.region);
    return set;
}

std::vector<PlanePoint> generate_plane(const SampleSpec& spec) {
    if (region_dim(spec.region) != 2) throw InvalidSpec("expected a two-dimensional region");
    const SampleSet set = generate(spec);
    std::vector<PlanePoint> out(set.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = set.plane(i);
    return out;
}

}  // namespace homeo
