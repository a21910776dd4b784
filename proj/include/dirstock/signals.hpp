#pragma once

#include <cstdint>
#include <vector>

#include "dirstock/grids.hpp"

namespace dirstock {

// c e^{i nu.(x - x_k)} e^{-|x - x_k|^2 / (2 sigma^2)}, with transform
// c 2 pi sigma^2 e^{-sigma^2 |w - nu|^2 / 2} e^{-i w.x_k}.
struct GaborAtom {
    cplx c{1, 0};
    double x = 0, y = 0;
    double nu_x = 0, nu_y = 0;
    double sigma = 1;

    cplx value(double px, double py) const;
    cplx spectrum(double wx, double wy) const;
};

struct AtomSignal {
    std::vector<GaborAtom> atoms;

    cplx value(double x, double y) const;
    cplx spectrum(double wx, double wy) const;
    SignalGrid2D sample(const SignalGrid2D& geometry) const;
    // Analytic partial derivatives of the sampled function.
    SignalGrid2D sample_derivative(const SignalGrid2D& geometry, int a1, int a2) const;
    double norm2() const; // exact L2 norm squared
};

// Atoms with frequencies |nu| = rho on random directions, random positions within
// `spread` of the origin and random complex amplitudes. Spectrum sits in the annulus
// rho +- 4/sigma up to e^{-8}.
AtomSignal annulus_signal(std::size_t atoms, double rho, double sigma, double spread,
                          std::uint64_t seed);

// e^{-|x|^2/2}.
SignalGrid2D gaussian_grid(const SignalGrid2D& geometry, double sigma = 1.0);

SignalGrid2D make_grid(std::size_t n, double dx);

} // namespace dirstock

namespace dirstock {

// d^{a1}_x d^{a2}_y by FFT multiplication with (i w)^alpha on the periodic grid.
SignalGrid2D spectral_derivative(const SignalGrid2D& f, int a1, int a2);

} // namespace dirstock
