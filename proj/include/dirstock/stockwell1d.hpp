#pragma once

#include <span>
#include <vector>

#include "dirstock/grids.hpp"
#include "dirstock/windows.hpp"

namespace dirstock {

struct Sampled1D {
    double x0 = 0;
    double dx = 1;
    std::vector<cplx> values;
    double at(std::size_t m) const { return x0 + double(m) * dx; }
};

struct StockwellRow {
    double a = 1;
    UniformGrid1D b;
    std::vector<cplx> values;
};

// (|a|/sqrt(2 pi)) sum_m g(x_m) conj(psi(a(x_m - b))) e^{-i x_m a} dx
cplx stockwell_direct(const Sampled1D& g, const Window1D& psi, double b, double a);

// FFT route. b must lie on the lattice of g (same step, offset a multiple of it).
StockwellRow stockwell_fft(const Sampled1D& g, const Window1D& psi, UniformGrid1D b, double a);

// Several scales sharing forward transforms of g. fft_length = 0 picks, per scale,
// the shortest power of two that keeps wrap-around off the requested offsets.
std::vector<StockwellRow> stockwell_fft_rows(const Sampled1D& g, const Window1D& psi,
                                             UniformGrid1D b, std::span<const double> scales,
                                             std::size_t fft_length = 0);

namespace detail {

// FFT length M (2-3-5 smooth) such that a function supported in [lo, hi], correlated
// with a window of time radius R at scale a_min, is unaffected by wrap-around on
// [b_lo, b_hi] when sampled at `step`.
std::size_t periodic_length(double lo, double hi, double b_lo, double b_hi, double radius,
                            double a_min, double step);

// Lattice indices l with l*dxi inside a*(1 + [lo, hi]) for the window support.
void scale_band(double a, const Window1D& psi, double dxi, long& l_lo, long& l_hi);

} // namespace detail
} // namespace dirstock
