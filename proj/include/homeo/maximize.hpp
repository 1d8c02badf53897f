#pragma once

#include <cstddef>
#include <functional>

namespace homeo {

struct Maximum {
    double argument = 0.0;
    double value = 0.0;
};

/// Maximizes f on [lo, hi]: evaluates an n-point uniform grid (n >= 2), then refines on the
/// two grid cells around the grid argmax with Brent's method. The result is never below the
/// grid maximum.
Maximum maximize_on_interval(const std::function<double(double)>& f, double lo, double hi, std::size_t n);

}  // namespace homeo
