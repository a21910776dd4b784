#include "dirstock/interp.hpp"

#include <cmath>

namespace dirstock {

namespace {
const double z1 = std::sqrt(3.0) - 2.0;
}

std::vector<cplx> bspline3_prefilter_zero(std::span<const cplx> samples, std::size_t pad) {
    const std::size_t n = samples.size() + 2 * pad;
    std::vector<cplx> c(n, cplx{});
    for (std::size_t m = 0; m < samples.size(); ++m) c[pad + m] = samples[m];
    if (n == 0) return c;
    // Causal pass starts inside the zero padding, so c+[0] = 0 is exact.
    for (std::size_t m = 1; m < n; ++m) c[m] += z1 * c[m - 1];
    // Anticausal pass: closed-form start for a sequence continued by zeros.
    c[n - 1] = (z1 / (z1 * z1 - 1.0)) * c[n - 1];
    for (std::size_t m = n - 1; m-- > 0;) c[m] = z1 * (c[m + 1] - c[m]);
    for (auto& v : c) v *= 6.0;
    return c;
}

Spline2D::Spline2D(std::span<const cplx> values, std::size_t nx, std::size_t ny, double x0,
                   double y0, double dx, double dy)
    : mx_(nx + 2 * pad), my_(ny + 2 * pad), x0_(x0), y0_(y0), dx_(dx), dy_(dy) {
    require(values.size() == nx * ny, "Spline2D: size mismatch");
    std::vector<cplx> rows(mx_ * ny);
    for (std::size_t iy = 0; iy < ny; ++iy) {
        auto c = bspline3_prefilter_zero(values.subspan(iy * nx, nx), pad);
        std::copy(c.begin(), c.end(), rows.begin() + std::ptrdiff_t(iy * mx_));
    }
    coef_.assign(mx_ * my_, cplx{});
    std::vector<cplx> col(ny);
    for (std::size_t ix = 0; ix < mx_; ++ix) {
        for (std::size_t iy = 0; iy < ny; ++iy) col[iy] = rows[iy * mx_ + ix];
        auto c = bspline3_prefilter_zero(col, pad);
        for (std::size_t iy = 0; iy < my_; ++iy) coef_[iy * mx_ + ix] = c[iy];
    }
}

cplx Spline2D::operator()(double x, double y) const {
    const double sx = (x - x0_) / dx_ + double(pad);
    const double sy = (y - y0_) / dy_ + double(pad);
    const double fx = std::floor(sx), fy = std::floor(sy);
    const long ix = long(fx), iy = long(fy);
    if (ix < 1 || iy < 1 || ix + 2 >= long(mx_) || iy + 2 >= long(my_)) return {};
    const auto wx = bspline3_weights(sx - fx);
    const auto wy = bspline3_weights(sy - fy);
    double re = 0, im = 0;
    for (int b = 0; b < 4; ++b) {
        const cplx* row = coef_.data() + std::size_t(iy - 1 + b) * mx_ + std::size_t(ix - 1);
        double rr = 0, ri = 0;
        for (int a = 0; a < 4; ++a) {
            rr += wx[a] * row[a].real();
            ri += wx[a] * row[a].imag();
        }
        re += wy[b] * rr;
        im += wy[b] * ri;
    }
    return {re, im};
}

} // namespace dirstock
