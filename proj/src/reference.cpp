#include "dirstock/reference.hpp"

#include <cmath>

#include "dirstock/dst.hpp"

namespace dirstock::reference {

cplx inner_product_Y(const CoefficientVolume& F, const CoefficientVolume& G) {
    require(F.axes == G.axes, "reference::inner_product_Y: axes mismatch");
    const auto w = measure_weights(F.axes);
    cplx s{};
    for (std::size_t i = 0; i < F.axes.n_angles(); ++i)
        for (std::size_t j = 0; j < F.axes.n_offsets(); ++j)
            for (std::size_t k = 0; k < F.axes.n_scales(); ++k) {
                const std::size_t q = F.index(i, j, k);
                s += w[q] * F.values[q] * std::conj(G.values[q]);
            }
    return s;
}

SignalGrid2D synthesize(const CoefficientVolume& Phi, const Window1D& psi,
                        const SignalGrid2D& target) {
    const auto& ax = Phi.axes;
    SignalGrid2D out = target.zeros_like();
    for (std::size_t iy = 0; iy < out.ny; ++iy)
        for (std::size_t ix = 0; ix < out.nx; ++ix) {
            const double x = out.x(ix), y = out.y(iy);
            cplx acc{};
            for (std::size_t i = 0; i < ax.n_angles(); ++i) {
                const double p = x * std::cos(ax.angles[i]) + y * std::sin(ax.angles[i]);
                for (std::size_t j = 0; j < ax.n_offsets(); ++j)
                    for (std::size_t k = 0; k < ax.n_scales(); ++k) {
                        const cplx v = Phi.at(i, j, k);
                        if (v == cplx{}) continue;
                        const double a = ax.scales[k];
                        const cplx atom = std::abs(a) / two_pi * psi(a * (p - ax.offsets[j])) *
                                          std::polar(1.0, a * p);
                        acc += ax.weight(i, j, k) * v * atom;
                    }
            }
            out.at(ix, iy) = acc;
        }
    return out;
}

CoefficientVolume dst_direct_volume(const SignalGrid2D& f, const Window1D& psi,
                                    const CoefficientAxes& axes) {
    CoefficientVolume vol(axes);
    for (std::size_t i = 0; i < axes.n_angles(); ++i)
        for (std::size_t j = 0; j < axes.n_offsets(); ++j)
            for (std::size_t k = 0; k < axes.n_scales(); ++k)
                vol.at(i, j, k) = dst_direct(f, psi, axes.angles[i], axes.offsets[j], axes.scales[k]);
    return vol;
}

} // namespace dirstock::reference
