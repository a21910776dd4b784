#pragma once

// Serial, unfactorized versions of the parallel kernels. Kept for tests and
// benchmarks; they share no code with the fast paths beyond window evaluation.

#include "dirstock/grids.hpp"
#include "dirstock/windows.hpp"

namespace dirstock::reference {

// sum_{ijk} w_ijk F conj(G) with the full weight array.
cplx inner_product_Y(const CoefficientVolume& F, const CoefficientVolume& G);

// Pointwise triple sum of w Phi psi_{u,b,a}(x) over every cell.
SignalGrid2D synthesize(const CoefficientVolume& Phi, const Window1D& psi,
                        const SignalGrid2D& target);

// dst_direct over every cell of the axes.
CoefficientVolume dst_direct_volume(const SignalGrid2D& f, const Window1D& psi,
                                    const CoefficientAxes& axes);

} // namespace dirstock::reference
