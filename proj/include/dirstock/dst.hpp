#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dirstock/grids.hpp"
#include "dirstock/radon.hpp"
#include "dirstock/windows.hpp"

namespace dirstock {

struct DstOptions {
    SliceMode slice = SliceMode::Fast;
    std::size_t padding = 8;
    LineInterp interp = LineInterp::CubicSpline;
    std::vector<std::string>* warnings = nullptr; // optional sink
};

// Quadrature oracle: (|a|/2pi) sum f(x) conj(psi(a(x.u - b))) e^{-ia x.u} dx dy.
cplx dst_direct(const SignalGrid2D& f, const Window1D& psi, double theta, double b, double a);

// e^{-iab} (2pi)^{-2} int f_hat(xi u) conj(psi_hat(xi/a - 1)) e^{i xi b} dxi per angle.
CoefficientVolume dst_fourier(const SignalGrid2D& f, const Window1D& psi,
                              const CoefficientAxes& axes, const DstOptions& opt = {});

// Same slices shared by several windows.
std::vector<CoefficientVolume> dst_fourier_multi(const SignalGrid2D& f,
                                                 const std::vector<const Window1D*>& windows,
                                                 const CoefficientAxes& axes,
                                                 const DstOptions& opt = {});

// Radon projection followed by the 1-D transform, times (2pi)^{-1/2}.
CoefficientVolume dst_radon(const SignalGrid2D& f, const Window1D& psi,
                            const CoefficientAxes& axes, const DstOptions& opt = {});

// Throws InvalidArgument when the axes need frequencies past the signal Nyquist band
// or offset spacing too coarse for the window bandwidth.
void check_axes_compatible(const SignalGrid2D& f, const Window1D& psi,
                           const CoefficientAxes& axes);

struct MultiIndex {
    int a1 = 0, a2 = 0;
    int order() const { return a1 + a2; }
};

// f = sum_j d^{alpha_j} f_j.
struct DistributionRep {
    struct Term {
        MultiIndex alpha;
        SignalGrid2D f;
    };
    std::vector<Term> terms;
};

inline constexpr int max_distribution_order = 4;

CoefficientVolume dst_distribution(const DistributionRep& rep, const Window1D& psi,
                                   const CoefficientAxes& axes, const DstOptions& opt = {});

struct ProbeCell {
    std::size_t i, j, k;
};

// Deterministic pseudo-random cells.
std::vector<ProbeCell> probe_cells(const CoefficientAxes& axes, std::size_t count,
                                   std::uint64_t seed = 12345);

// Relative RMS of volume values against dst_direct on the given cells.
double probe_error(const CoefficientVolume& vol, const SignalGrid2D& f, const Window1D& psi,
                   const std::vector<ProbeCell>& cells);

} // namespace dirstock
