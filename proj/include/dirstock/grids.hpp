#pragma once

#include <vector>

#include "dirstock/common.hpp"

namespace dirstock {

// Uniform samples of f on x = x0 + ix*dx, y = y0 + iy*dy, stored row-major with
// x varying fastest: values[iy*nx + ix].
struct SignalGrid2D {
    std::size_t nx = 0, ny = 0;
    double x0 = 0, y0 = 0, dx = 1, dy = 1;
    std::vector<cplx> values;

    SignalGrid2D() = default;
    SignalGrid2D(std::size_t nx, std::size_t ny, double x0, double y0, double dx, double dy);

    double x(std::size_t ix) const { return x0 + double(ix) * dx; }
    double y(std::size_t iy) const { return y0 + double(iy) * dy; }
    double center_x() const { return x0 + 0.5 * double(nx - 1) * dx; }
    double center_y() const { return y0 + 0.5 * double(ny - 1) * dy; }
    cplx& at(std::size_t ix, std::size_t iy) { return values[iy * nx + ix]; }
    cplx at(std::size_t ix, std::size_t iy) const { return values[iy * nx + ix]; }

    bool same_geometry(const SignalGrid2D& o) const;
    SignalGrid2D zeros_like() const;
    void validate() const;
};

// start + j*step, j < count.
struct UniformGrid1D {
    double start = 0;
    double step = 1;
    std::size_t count = 0;
    double at(std::size_t j) const { return start + double(j) * step; }
    double last() const { return at(count - 1); }
};

struct OffsetSpec {
    double min = -1, max = 1;
    std::size_t count = 2;
};

struct ScaleSpec {
    double a_min = 1, a_max = 2;
    std::size_t count_per_sign = 2;
};

// Discretization of S^1 x R x R^x. Scales are ordered -a_max .. -a_min, a_min .. a_max.
struct CoefficientAxes {
    std::vector<double> angles;
    std::vector<double> offsets;
    std::vector<double> scales;
    int n = 2;
    double ratio = 2.0; // geometric ratio of consecutive scales of one sign

    std::size_t n_angles() const { return angles.size(); }
    std::size_t n_offsets() const { return offsets.size(); }
    std::size_t n_scales() const { return scales.size(); }
    std::size_t per_sign() const { return scales.size() / 2; }
    std::size_t size() const { return n_angles() * n_offsets() * n_scales(); }

    double angle_step() const { return two_pi / double(angles.size()); }
    double offset_step() const;
    // Trapezoid weights on b, endpoints halved.
    double offset_weight(std::size_t j) const;
    double scale_weight(std::size_t k) const;
    // |a|^{n-2} da dtheta for angle/scale pair; multiply by offset_weight(j).
    double angle_scale_weight(std::size_t k) const;
    double weight(std::size_t /*i*/, std::size_t j, std::size_t k) const {
        return angle_scale_weight(k) * offset_weight(j);
    }
    // Index of the scale with the opposite sign.
    std::size_t mirror(std::size_t k) const { return n_scales() - 1 - k; }

    bool operator==(const CoefficientAxes& o) const;

    // Rebuild from explicit arrays, checking uniform angles, uniform offsets and a
    // symmetric geometric scale grid.
    static CoefficientAxes from_arrays(std::vector<double> angles, std::vector<double> offsets,
                                       std::vector<double> scales, int n);
};

CoefficientAxes make_coefficient_axes(std::size_t n_angles, OffsetSpec b, ScaleSpec a,
                                      int n = 2);

// Full w_{ijk} array in volume order.
std::vector<double> measure_weights(const CoefficientAxes& axes);

// Values indexed (angle i, offset j, scale k) with k fastest.
struct CoefficientVolume {
    CoefficientAxes axes;
    std::vector<cplx> values;

    CoefficientVolume() = default;
    explicit CoefficientVolume(CoefficientAxes ax);

    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
        return (i * axes.n_offsets() + j) * axes.n_scales() + k;
    }
    cplx& at(std::size_t i, std::size_t j, std::size_t k) { return values[index(i, j, k)]; }
    cplx at(std::size_t i, std::size_t j, std::size_t k) const { return values[index(i, j, k)]; }
};

cplx inner_product_Y(const CoefficientVolume& F, const CoefficientVolume& G);
double norm2_Y(const CoefficientVolume& F);

cplx inner_product_R2(const SignalGrid2D& f, const SignalGrid2D& h);
double norm2_R2(const SignalGrid2D& f);

// Relative RMS distance |a - b| / |b| over matching arrays.
double relative_rms(const std::vector<cplx>& a, const std::vector<cplx>& b);

} // namespace dirstock
