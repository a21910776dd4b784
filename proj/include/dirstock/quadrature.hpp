#pragma once

#include <functional>

#include "dirstock/common.hpp"

namespace dirstock {

struct QuadratureResult {
    cplx value;
    double error = 0;
    std::size_t evaluations = 0;
};

// Adaptive Simpson with Richardson correction. The error estimate is the sum of
// |S2 - S1| / 15 over accepted panels.
QuadratureResult adaptive_simpson(const std::function<cplx(double)>& f, double a, double b,
                                  double abs_tol = 1e-13, int max_depth = 40);

} // namespace dirstock
