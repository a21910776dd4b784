#include "dirstock/grids.hpp"

#include <cmath>

namespace dirstock {

SignalGrid2D::SignalGrid2D(std::size_t nx_, std::size_t ny_, double x0_, double y0_,
                           double dx_, double dy_)
    : nx(nx_), ny(ny_), x0(x0_), y0(y0_), dx(dx_), dy(dy_), values(nx_ * ny_) {
    validate();
}

void SignalGrid2D::validate() const {
    require(nx >= 2 && ny >= 2, "grid: need at least 2 samples per axis");
    require(dx > 0 && dy > 0 && std::isfinite(dx) && std::isfinite(dy),
            "grid: spacing must be positive");
    require(std::isfinite(x0) && std::isfinite(y0), "grid: origin must be finite");
    require(values.size() == nx * ny, "grid: value count does not match nx*ny");
    for (const auto& v : values)
        require(std::isfinite(v.real()) && std::isfinite(v.imag()), "grid: non-finite value");
}

bool SignalGrid2D::same_geometry(const SignalGrid2D& o) const {
    return nx == o.nx && ny == o.ny && x0 == o.x0 && y0 == o.y0 && dx == o.dx && dy == o.dy;
}

SignalGrid2D SignalGrid2D::zeros_like() const { return SignalGrid2D(nx, ny, x0, y0, dx, dy); }

double CoefficientAxes::offset_step() const {
    return offsets.size() > 1 ? offsets[1] - offsets[0] : 0.0;
}

double CoefficientAxes::offset_weight(std::size_t j) const {
    const double h = offset_step();
    return (j == 0 || j + 1 == offsets.size()) ? 0.5 * h : h;
}

double CoefficientAxes::scale_weight(std::size_t k) const {
    return std::abs(scales[k]) * std::log(ratio);
}

double CoefficientAxes::angle_scale_weight(std::size_t k) const {
    return std::pow(std::abs(scales[k]), n - 2) * scale_weight(k) * angle_step();
}

bool CoefficientAxes::operator==(const CoefficientAxes& o) const {
    return angles == o.angles && offsets == o.offsets && scales == o.scales && n == o.n;
}

CoefficientAxes make_coefficient_axes(std::size_t n_angles, OffsetSpec b, ScaleSpec a, int n) {
    require(a.a_min > 0, "axes: a_min must be positive (a = 0 is excluded)");
    require(a.a_max > a.a_min, "axes: a_max must exceed a_min");
    require(a.count_per_sign >= 2, "axes: need at least 2 scales per sign");
    require(n_angles >= 2, "axes: need at least 2 angles");
    require(b.count >= 2, "axes: need at least 2 offsets");
    require(b.max >= b.min, "axes: offset range is reversed");
    require(n >= 2, "axes: dimension must be at least 2");
    CoefficientAxes ax;
    ax.n = n;
    ax.angles.resize(n_angles);
    for (std::size_t i = 0; i < n_angles; ++i) ax.angles[i] = two_pi * double(i) / double(n_angles);
    ax.offsets.resize(b.count);
    const double db = (b.max - b.min) / double(b.count - 1);
    for (std::size_t j = 0; j < b.count; ++j) ax.offsets[j] = b.min + double(j) * db;
    const std::size_t K = a.count_per_sign;
    ax.ratio = std::pow(a.a_max / a.a_min, 1.0 / double(K - 1));
    std::vector<double> pos(K);
    for (std::size_t k = 0; k < K; ++k)
        pos[k] = (k + 1 == K) ? a.a_max : a.a_min * std::pow(ax.ratio, double(k));
    ax.scales.resize(2 * K);
    for (std::size_t k = 0; k < K; ++k) {
        ax.scales[K - 1 - k] = -pos[k];
        ax.scales[K + k] = pos[k];
    }
    return ax;
}

CoefficientAxes CoefficientAxes::from_arrays(std::vector<double> angles,
                                             std::vector<double> offsets,
                                             std::vector<double> scales, int n) {
    require(angles.size() >= 2 && offsets.size() >= 2 && scales.size() >= 4 &&
                scales.size() % 2 == 0,
            "axes: array sizes too small");
    const double dth = two_pi / double(angles.size());
    for (std::size_t i = 0; i < angles.size(); ++i)
        require(std::abs(angles[i] - dth * double(i)) < 1e-9, "axes: angles not uniform on [0, 2pi)");
    const double db = offsets[1] - offsets[0];
    for (std::size_t j = 1; j < offsets.size(); ++j)
        require(std::abs(offsets[j] - offsets[0] - db * double(j)) < 1e-9 * std::max(1.0, std::abs(db) * double(j)),
                "axes: offsets not uniform");
    const std::size_t K = scales.size() / 2;
    require(scales[K] > 0, "axes: positive scales must be positive");
    const double r = scales[K + 1] / scales[K];
    require(r > 1, "axes: scales not increasing");
    for (std::size_t k = 0; k < K; ++k) {
        require(scales[K - 1 - k] == -scales[K + k], "axes: scale branches not symmetric");
        if (k > 0)
            require(std::abs(scales[K + k] / scales[K + k - 1] - r) < 1e-9 * r,
                    "axes: scales not geometric");
    }
    CoefficientAxes ax;
    ax.angles = std::move(angles);
    ax.offsets = std::move(offsets);
    ax.scales = std::move(scales);
    ax.n = n;
    ax.ratio = std::pow(ax.scales.back() / ax.scales[K], 1.0 / double(K - 1));
    return ax;
}

std::vector<double> measure_weights(const CoefficientAxes& axes) {
    std::vector<double> w(axes.size());
    std::size_t q = 0;
    for (std::size_t i = 0; i < axes.n_angles(); ++i)
        for (std::size_t j = 0; j < axes.n_offsets(); ++j)
            for (std::size_t k = 0; k < axes.n_scales(); ++k) w[q++] = axes.weight(i, j, k);
    return w;
}

CoefficientVolume::CoefficientVolume(CoefficientAxes ax)
    : axes(std::move(ax)), values(axes.size()) {}

cplx inner_product_Y(const CoefficientVolume& F, const CoefficientVolume& G) {
    require(F.axes == G.axes, "inner_product_Y: axes mismatch");
    require(F.values.size() == F.axes.size() && G.values.size() == G.axes.size(),
            "inner_product_Y: value array does not match axes");
    const auto& ax = F.axes;
    const std::size_t na = ax.n_angles(), nb = ax.n_offsets(), nk = ax.n_scales();
    std::vector<double> wk(nk), wj(nb);
    for (std::size_t k = 0; k < nk; ++k) wk[k] = ax.angle_scale_weight(k);
    for (std::size_t j = 0; j < nb; ++j) wj[j] = ax.offset_weight(j);
    // Per-angle partial sums, merged in angle order so the result does not depend on
    // the thread count.
    std::vector<cplx> partial(na);
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < na; ++i) {
        double re = 0, im = 0;
        for (std::size_t j = 0; j < nb; ++j) {
            const cplx* f = F.values.data() + (i * nb + j) * nk;
            const cplx* g = G.values.data() + (i * nb + j) * nk;
            double rj = 0, ij = 0;
            for (std::size_t k = 0; k < nk; ++k) {
                // f * conj(g)
                const double fr = f[k].real(), fi = f[k].imag();
                const double gr = g[k].real(), gi = g[k].imag();
                rj += wk[k] * (fr * gr + fi * gi);
                ij += wk[k] * (fi * gr - fr * gi);
            }
            re += wj[j] * rj;
            im += wj[j] * ij;
        }
        partial[i] = {re, im};
    }
    cplx total{};
    for (const auto& p : partial) total += p;
    return total;
}

double norm2_Y(const CoefficientVolume& F) { return inner_product_Y(F, F).real(); }

cplx inner_product_R2(const SignalGrid2D& f, const SignalGrid2D& h) {
    require(f.same_geometry(h), "inner_product_R2: grid mismatch");
    double re = 0, im = 0;
    for (std::size_t q = 0; q < f.values.size(); ++q) {
        const cplx a = f.values[q], b = h.values[q];
        re += a.real() * b.real() + a.imag() * b.imag();
        im += a.imag() * b.real() - a.real() * b.imag();
    }
    return cplx(re, im) * (f.dx * f.dy);
}

double norm2_R2(const SignalGrid2D& f) { return inner_product_R2(f, f).real(); }

double relative_rms(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    require(a.size() == b.size(), "relative_rms: size mismatch");
    double num = 0, den = 0;
    for (std::size_t q = 0; q < a.size(); ++q) {
        num += std::norm(a[q] - b[q]);
        den += std::norm(b[q]);
    }
    if (den == 0) return num == 0 ? 0.0 : INFINITY;
    return std::sqrt(num / den);
}

} // namespace dirstock
