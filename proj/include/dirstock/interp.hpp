#pragma once

#include <array>
#include <span>
#include <vector>

#include "dirstock/common.hpp"

namespace dirstock {

// Cubic Hermite on [0, h] given end values and end derivatives, t in [0, 1].
inline cplx hermite3(cplx y0, cplx y1, cplx d0, cplx d1, double t, double h) {
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * h * d0 +
           (-2 * t3 + 3 * t2) * y1 + (t3 - t2) * h * d1;
}

// Quintic Hermite: values, first and second derivatives at both ends.
inline cplx hermite5(cplx y0, cplx y1, cplx d0, cplx d1, cplx s0, cplx s1, double t,
                     double h) {
    const double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
    const double h00 = 1 - 10 * t3 + 15 * t4 - 6 * t5;
    const double h10 = t - 6 * t3 + 8 * t4 - 3 * t5;
    const double h20 = 0.5 * (t2 - 3 * t3 + 3 * t4 - t5);
    const double h01 = 10 * t3 - 15 * t4 + 6 * t5;
    const double h11 = -4 * t3 + 7 * t4 - 3 * t5;
    const double h21 = 0.5 * (t3 - 2 * t4 + t5);
    return h00 * y0 + h10 * h * d0 + h20 * h * h * s0 + h01 * y1 + h11 * h * d1 +
           h21 * h * h * s1;
}

// Values and derivatives on x_m = start + m*step; cubic Hermite in between and
// zero outside the table.
struct HermiteTable {
    double start = 0.0;
    double step = 1.0;
    std::vector<cplx> values;
    std::vector<cplx> derivs;

    cplx operator()(double x) const {
        const double s = (x - start) / step;
        if (!(s >= 0.0) || values.size() < 2) return {0.0, 0.0};
        const auto m = static_cast<std::size_t>(s);
        if (m + 1 >= values.size()) {
            return (m + 1 == values.size() && s == static_cast<double>(m)) ? values[m] : cplx{};
        }
        return hermite3(values[m], values[m + 1], derivs[m], derivs[m + 1],
                        s - static_cast<double>(m), step);
    }
};

// Cubic B-spline weights for taps at floor-1 .. floor+2, t = fractional part.
inline std::array<double, 4> bspline3_weights(double t) {
    const double u = 1.0 - t, t2 = t * t, t3 = t2 * t;
    return {u * u * u / 6.0, (3 * t3 - 6 * t2 + 4) / 6.0,
            (-3 * t3 + 3 * t2 + 3 * t + 1) / 6.0, t3 / 6.0};
}

// Interpolating cubic B-spline coefficients of a zero-extended sequence. The output is
// padded by `pad` cells on each side; coefficients past the padding are < 0.27^pad
// of the data and treated as zero.
std::vector<cplx> bspline3_prefilter_zero(std::span<const cplx> samples, std::size_t pad);

// Interpolating cubic spline of a uniformly sampled 2-D field that vanishes outside
// the sampled rectangle.
class Spline2D {
public:
    Spline2D() = default;
    Spline2D(std::span<const cplx> values, std::size_t nx, std::size_t ny, double x0,
             double y0, double dx, double dy);

    cplx operator()(double x, double y) const;

    static constexpr std::size_t pad = 24;

private:
    std::size_t mx_ = 0, my_ = 0;
    double x0_ = 0, y0_ = 0, dx_ = 1, dy_ = 1;
    std::vector<cplx> coef_; // (my_ * mx_) with padding
};

// Linear interpolation on a uniform grid, zero outside.
inline cplx lerp_uniform(std::span<const cplx> v, double start, double step, double x) {
    const double s = (x - start) / step;
    if (!(s >= 0.0)) return {};
    const auto m = static_cast<std::size_t>(s);
    if (m + 1 >= v.size()) return (m + 1 == v.size() && s == double(m)) ? v[m] : cplx{};
    const double t = s - double(m);
    return (1.0 - t) * v[m] + t * v[m + 1];
}

} // namespace dirstock
