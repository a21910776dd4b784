#pragma once

#include <span>
#include <vector>

#include "dirstock/grids.hpp"
#include "dirstock/interp.hpp"

namespace dirstock {

struct Projection1D {
    double theta = 0;
    UniformGrid1D p;
    std::vector<cplx> values;
};

struct SpectralSlice {
    double theta = 0;
    UniformGrid1D xi;
    std::vector<cplx> values;
};

// Interpolation used to sample f along a line. Bilinear is second order; the
// prefiltered cubic spline is fourth order and is the default.
enum class LineInterp { Bilinear, CubicSpline };

// Direct: exact sum over grid samples. Fast: zero-padded 2-D FFT followed by
// cubic spline interpolation on the Cartesian frequency lattice.
enum class SliceMode { Direct, Fast };

// Line integrals x = p u + t u_perp, u = (cos theta, sin theta), sampled in t at
// min(dx, dy)/2 around the grid centre with the trapezoid rule.
class RadonProjector {
public:
    explicit RadonProjector(const SignalGrid2D& f, LineInterp interp = LineInterp::CubicSpline);
    Projection1D project(double theta, UniformGrid1D p) const;
    void project(double theta, UniformGrid1D p, std::span<cplx> out) const;

private:
    cplx sample(double x, double y) const;
    const SignalGrid2D* f_;
    LineInterp interp_;
    Spline2D spline_;
};

Projection1D radon_direct(const SignalGrid2D& f, double theta, UniformGrid1D p,
                          LineInterp interp = LineInterp::CubicSpline);

std::vector<Projection1D> sinogram(const SignalGrid2D& f, std::span<const double> angles,
                                   UniformGrid1D p, LineInterp interp = LineInterp::CubicSpline);

// Evaluates f_hat(xi u) along rays. Construction does all per-signal work (the
// padded FFT in fast mode), so one evaluator serves every angle.
class SliceEvaluator {
public:
    SliceEvaluator(const SignalGrid2D& f, SliceMode mode, std::size_t padding = 8);
    void evaluate(double theta, UniformGrid1D xi, std::span<cplx> out) const;
    double nyquist_x() const { return pi / f_->dx; }
    double nyquist_y() const { return pi / f_->dy; }

private:
    void direct(double theta, UniformGrid1D xi, std::span<cplx> out) const;
    void fast(double theta, UniformGrid1D xi, std::span<cplx> out) const;

    const SignalGrid2D* f_;
    SliceMode mode_;
    std::size_t qx_ = 0, qy_ = 0, mcx_ = 0, mcy_ = 0;
    double cx_ = 0, cy_ = 0;
    std::vector<cplx> coef_;
};

SpectralSlice fourier_slice(const SignalGrid2D& f, double theta, UniformGrid1D xi,
                            SliceMode mode = SliceMode::Direct, std::size_t padding = 8);

// sum_j g(p_j) e^{-i xi p_j} dp, the 1-D transform of a sampled projection.
SpectralSlice projection_spectrum(const Projection1D& g, UniformGrid1D xi);

// R* rho(x) = sum_i rho(theta_i, x.u_i) dtheta, linear in p.
SignalGrid2D dual_radon(std::span<const Projection1D> rho, const SignalGrid2D& geometry);

} // namespace dirstock
