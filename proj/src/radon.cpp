#include "dirstock/radon.hpp"

#include <algorithm>
#include <cmath>

#include "dirstock/fft.hpp"

namespace dirstock {

RadonProjector::RadonProjector(const SignalGrid2D& f, LineInterp interp)
    : f_(&f), interp_(interp) {
    f.validate();
    if (interp_ == LineInterp::CubicSpline)
        spline_ = Spline2D(f.values, f.nx, f.ny, f.x0, f.y0, f.dx, f.dy);
}

cplx RadonProjector::sample(double x, double y) const {
    if (interp_ == LineInterp::CubicSpline) return spline_(x, y);
    const auto& f = *f_;
    const double sx = (x - f.x0) / f.dx, sy = (y - f.y0) / f.dy;
    const double fx = std::floor(sx), fy = std::floor(sy);
    const long ix = long(fx), iy = long(fy);
    const double tx = sx - fx, ty = sy - fy;
    auto get = [&](long a, long b) -> cplx {
        if (a < 0 || b < 0 || a >= long(f.nx) || b >= long(f.ny)) return {};
        return f.values[std::size_t(b) * f.nx + std::size_t(a)];
    };
    return (1 - ty) * ((1 - tx) * get(ix, iy) + tx * get(ix + 1, iy)) +
           ty * ((1 - tx) * get(ix, iy + 1) + tx * get(ix + 1, iy + 1));
}

void RadonProjector::project(double theta, UniformGrid1D p, std::span<cplx> out) const {
    require(out.size() == p.count, "radon: output size mismatch");
    const auto& f = *f_;
    const double c = std::cos(theta), s = std::sin(theta);
    const double h = 0.5 * std::min(f.dx, f.dy);
    // Region where the interpolant can be nonzero.
    const double ext = interp_ == LineInterp::CubicSpline ? double(Spline2D::pad) : 1.0;
    const double xlo = f.x0 - ext * f.dx, xhi = f.x(f.nx - 1) + ext * f.dx;
    const double ylo = f.y0 - ext * f.dy, yhi = f.y(f.ny - 1) + ext * f.dy;
    const double tc = -f.center_x() * s + f.center_y() * c;
    for (std::size_t j = 0; j < p.count; ++j) {
        const double pj = p.at(j);
        // x = pj u + t u_perp, u_perp = (-s, c); clip t to the rectangle.
        double tlo = -INFINITY, thi = INFINITY;
        auto clip = [&](double base, double dir, double lo, double hi) {
            if (std::abs(dir) < 1e-15) {
                if (base < lo || base > hi) tlo = INFINITY;
                return;
            }
            double a = (lo - base) / dir, b = (hi - base) / dir;
            if (a > b) std::swap(a, b);
            tlo = std::max(tlo, a);
            thi = std::min(thi, b);
        };
        clip(pj * c, -s, xlo, xhi);
        clip(pj * s, c, ylo, yhi);
        if (!(thi > tlo)) {
            out[j] = {};
            continue;
        }
        const long l0 = long(std::ceil((tlo - tc) / h)), l1 = long(std::floor((thi - tc) / h));
        double re = 0, im = 0;
        for (long l = l0; l <= l1; ++l) {
            const double t = tc + double(l) * h;
            const cplx v = sample(pj * c - t * s, pj * s + t * c);
            re += v.real();
            im += v.imag();
        }
        // The interpolant vanishes at the clipped ends, so trapezoid = plain sum.
        out[j] = cplx(re, im) * h;
    }
}

Projection1D RadonProjector::project(double theta, UniformGrid1D p) const {
    Projection1D r{theta, p, std::vector<cplx>(p.count)};
    project(theta, p, r.values);
    return r;
}

Projection1D radon_direct(const SignalGrid2D& f, double theta, UniformGrid1D p,
                          LineInterp interp) {
    return RadonProjector(f, interp).project(theta, p);
}

std::vector<Projection1D> sinogram(const SignalGrid2D& f, std::span<const double> angles,
                                   UniformGrid1D p, LineInterp interp) {
    RadonProjector proj(f, interp);
    std::vector<Projection1D> out(angles.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < angles.size(); ++i) out[i] = proj.project(angles[i], p);
    return out;
}

SliceEvaluator::SliceEvaluator(const SignalGrid2D& f, SliceMode mode, std::size_t padding)
    : f_(&f), mode_(mode) {
    f.validate();
    if (mode_ != SliceMode::Fast) return;
    require(padding >= 1, "fourier_slice: padding must be at least 1");
    qx_ = fft::next_pow2(padding * f.nx);
    qy_ = fft::next_pow2(padding * f.ny);
    mcx_ = f.nx / 2;
    mcy_ = f.ny / 2;
    cx_ = f.x(mcx_);
    cy_ = f.y(mcy_);
    // Samples divided by the spline symbol, so the FFT yields B-spline coefficients
    // of the periodic frequency samples directly.
    auto symbol = [](long d, std::size_t q) {
        return 6.0 / (4.0 + 2.0 * std::cos(two_pi * double(d) / double(q)));
    };
    coef_.assign(qx_ * qy_, cplx{});
    for (std::size_t iy = 0; iy < f.ny; ++iy) {
        const long dyi = long(iy) - long(mcy_);
        const std::size_t ry = std::size_t((dyi + long(qy_)) % long(qy_));
        const double wy = symbol(dyi, qy_);
        for (std::size_t ix = 0; ix < f.nx; ++ix) {
            const long dxi = long(ix) - long(mcx_);
            const std::size_t rx = std::size_t((dxi + long(qx_)) % long(qx_));
            coef_[ry * qx_ + rx] = f.at(ix, iy) * (wy * symbol(dxi, qx_));
        }
    }
    fft::transform2d(coef_, qy_, qx_, -1);
}

void SliceEvaluator::evaluate(double theta, UniformGrid1D xi, std::span<cplx> out) const {
    require(out.size() == xi.count, "fourier_slice: output size mismatch");
    const double c = std::cos(theta), s = std::sin(theta);
    const double xmax = std::max(std::abs(xi.start), std::abs(xi.count ? xi.last() : 0.0));
    const double slack = 1e-12;
    require(xmax * std::abs(c) <= nyquist_x() * (1 + slack) &&
                xmax * std::abs(s) <= nyquist_y() * (1 + slack),
            "fourier_slice: frequency beyond the Nyquist band of the grid");
    if (mode_ == SliceMode::Direct)
        direct(theta, xi, out);
    else
        fast(theta, xi, out);
}

void SliceEvaluator::direct(double theta, UniformGrid1D xi, std::span<cplx> out) const {
    const auto& f = *f_;
    const double c = std::cos(theta), s = std::sin(theta);
    const double cx = f.center_x(), cy = f.center_y();
    std::vector<double> exr(f.nx), exi(f.nx), eyr(f.ny), eyi(f.ny);
    for (std::size_t l = 0; l < xi.count; ++l) {
        const double w = xi.at(l);
        for (std::size_t ix = 0; ix < f.nx; ++ix) {
            const double ph = -w * c * (f.x(ix) - cx);
            exr[ix] = std::cos(ph);
            exi[ix] = std::sin(ph);
        }
        for (std::size_t iy = 0; iy < f.ny; ++iy) {
            const double ph = -w * s * (f.y(iy) - cy);
            eyr[iy] = std::cos(ph);
            eyi[iy] = std::sin(ph);
        }
        double re = 0, im = 0;
        for (std::size_t iy = 0; iy < f.ny; ++iy) {
            const cplx* row = f.values.data() + iy * f.nx;
            double rr = 0, ri = 0;
            for (std::size_t ix = 0; ix < f.nx; ++ix) {
                const double a = row[ix].real(), b = row[ix].imag();
                rr += a * exr[ix] - b * exi[ix];
                ri += a * exi[ix] + b * exr[ix];
            }
            re += rr * eyr[iy] - ri * eyi[iy];
            im += rr * eyi[iy] + ri * eyr[iy];
        }
        out[l] = cplx(re, im) * std::polar(f.dx * f.dy, -w * (c * cx + s * cy));
    }
}

void SliceEvaluator::fast(double theta, UniformGrid1D xi, std::span<cplx> out) const {
    const auto& f = *f_;
    const double c = std::cos(theta), s = std::sin(theta);
    const double dwx = two_pi / (double(qx_) * f.dx), dwy = two_pi / (double(qy_) * f.dy);
    for (std::size_t l = 0; l < xi.count; ++l) {
        const double wx = xi.at(l) * c, wy = xi.at(l) * s;
        const double sx = wx / dwx, sy = wy / dwy;
        const double fx = std::floor(sx), fy = std::floor(sy);
        const auto ax = bspline3_weights(sx - fx);
        const auto ay = bspline3_weights(sy - fy);
        const long kx = long(fx), ky = long(fy);
        double re = 0, im = 0;
        for (int b = 0; b < 4; ++b) {
            const long ry = ((ky - 1 + b) % long(qy_) + long(qy_)) % long(qy_);
            const cplx* row = coef_.data() + std::size_t(ry) * qx_;
            double rr = 0, ri = 0;
            for (int a = 0; a < 4; ++a) {
                const long rx = ((kx - 1 + a) % long(qx_) + long(qx_)) % long(qx_);
                rr += ax[a] * row[rx].real();
                ri += ax[a] * row[rx].imag();
            }
            re += ay[b] * rr;
            im += ay[b] * ri;
        }
        out[l] = cplx(re, im) * std::polar(f.dx * f.dy, -(wx * cx_ + wy * cy_));
    }
}

SpectralSlice fourier_slice(const SignalGrid2D& f, double theta, UniformGrid1D xi,
                            SliceMode mode, std::size_t padding) {
    SliceEvaluator ev(f, mode, padding);
    SpectralSlice sl{theta, xi, std::vector<cplx>(xi.count)};
    ev.evaluate(theta, xi, sl.values);
    return sl;
}

SpectralSlice projection_spectrum(const Projection1D& g, UniformGrid1D xi) {
    SpectralSlice sl{g.theta, xi, std::vector<cplx>(xi.count)};
    for (std::size_t l = 0; l < xi.count; ++l) {
        const double w = xi.at(l);
        double re = 0, im = 0;
        for (std::size_t j = 0; j < g.values.size(); ++j) {
            const double ph = -w * g.p.at(j);
            const double cr = std::cos(ph), ci = std::sin(ph);
            re += g.values[j].real() * cr - g.values[j].imag() * ci;
            im += g.values[j].real() * ci + g.values[j].imag() * cr;
        }
        sl.values[l] = cplx(re, im) * g.p.step;
    }
    return sl;
}

SignalGrid2D dual_radon(std::span<const Projection1D> rho, const SignalGrid2D& geometry) {
    require(!rho.empty(), "dual_radon: no projections");
    const auto& p = rho.front().p;
    const std::size_t na = rho.size();
    const double dth = two_pi / double(na);
    for (std::size_t i = 0; i < na; ++i) {
        require(rho[i].p.start == p.start && rho[i].p.step == p.step &&
                    rho[i].p.count == p.count && rho[i].values.size() == p.count,
                "dual_radon: projections do not share one p grid");
        require(std::abs(rho[i].theta - dth * double(i)) < 1e-9,
                "dual_radon: angles must be uniform on [0, 2pi)");
    }
    SignalGrid2D out = geometry.zeros_like();
#pragma omp parallel for schedule(static)
    for (std::size_t iy = 0; iy < out.ny; ++iy) {
        for (std::size_t ix = 0; ix < out.nx; ++ix) {
            cplx acc{};
            for (std::size_t i = 0; i < na; ++i) {
                const double t = rho[i].theta;
                acc += lerp_uniform(rho[i].values, p.start, p.step,
                                    out.x(ix) * std::cos(t) + out.y(iy) * std::sin(t));
            }
            out.at(ix, iy) = acc * dth;
        }
    }
    return out;
}

} // namespace dirstock
