#include "homeo/maximize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include <boost/math/tools/minima.hpp>

#include "homeo/errors.hpp"

namespace homeo {

Maximum maximize_on_interval(const std::function<double(double)>& f, double lo, double hi, std::size_t n) {
    if (n < 2) throw InvalidSpec("grid maximization needs at least two points");
    if (!(lo < hi)) throw InvalidSpec("grid maximization needs lo < hi");

    const double step = (hi - lo) / static_cast<double>(n - 1);
    auto grid_point = [&](std::size_t k) { return k + 1 == n ? hi : lo + step * static_cast<double>(k); };

    std::size_t best_k = 0;
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
        const double v = f(grid_point(k));
        if (v > best) {
            best = v;
            best_k = k;
        }
    }

    const double a = grid_point(best_k == 0 ? 0 : best_k - 1);
    const double b = grid_point(std::min(best_k + 1, n - 1));
    std::uintmax_t max_iter = 200;
    const auto [arg, neg] = boost::math::tools::brent_find_minima(
        [&](double s) { return -f(s); }, a, b, std::numeric_limits<double>::digits, max_iter);

    // Brent stops near sqrt(machine epsilon); kinked maxima need a golden-section finish
    constexpr double kArgTol = 1e-12;
    constexpr double kInvPhi = 0.6180339887498949;
    const double radius = 1e-6 * std::max(1.0, std::abs(arg));
    double lo2 = std::max(a, arg - radius), hi2 = std::min(b, arg + radius);
    double x1 = hi2 - kInvPhi * (hi2 - lo2), x2 = lo2 + kInvPhi * (hi2 - lo2);
    double f1 = f(x1), f2 = f(x2);
    while (hi2 - lo2 > kArgTol) {
        if (f1 < f2) {
            lo2 = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo2 + kInvPhi * (hi2 - lo2);
            f2 = f(x2);
        } else {
            hi2 = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi2 - kInvPhi * (hi2 - lo2);
            f1 = f(x1);
        }
    }

    Maximum out{grid_point(best_k), best};
    for (const Maximum& c : {Maximum{arg, -neg}, Maximum{x1, f1}, Maximum{x2, f2}}) {
        if (c.value > out.value) out = c;
    }
    return out;
}

}  // namespace homeo
