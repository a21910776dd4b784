#include "dirstock/stockwell1d.hpp"

#include <algorithm>
#include <cmath>

#include "dirstock/fft.hpp"

namespace dirstock {

namespace detail {

std::size_t periodic_length(double lo, double hi, double b_lo, double b_hi, double radius,
                            double a_min, double step) {
    const double tail = radius / a_min;
    const double s_lo = lo - tail, s_hi = hi + tail;
    const double T = std::max({s_hi - b_lo, b_hi - s_lo, b_hi - b_lo + step});
    return fft::next_fast(std::size_t(std::ceil(T / step)) + 1);
}

void scale_band(double a, const Window1D& psi, double dxi, long& l_lo, long& l_hi) {
    double e0 = a * (1.0 + psi.support_lo()), e1 = a * (1.0 + psi.support_hi());
    if (e0 > e1) std::swap(e0, e1);
    l_lo = long(std::ceil(e0 / dxi));
    l_hi = long(std::floor(e1 / dxi));
}

} // namespace detail

cplx stockwell_direct(const Sampled1D& g, const Window1D& psi, double b, double a) {
    require(a != 0.0, "stockwell_direct: scale must be nonzero");
    double re = 0, im = 0;
    for (std::size_t m = 0; m < g.values.size(); ++m) {
        const double x = g.at(m);
        const cplx v = g.values[m] * std::conj(psi(a * (x - b))) * std::polar(1.0, -x * a);
        re += v.real();
        im += v.imag();
    }
    return cplx(re, im) * (std::abs(a) / std::sqrt(two_pi) * g.dx);
}

std::vector<StockwellRow> stockwell_fft_rows(const Sampled1D& g, const Window1D& psi,
                                             UniformGrid1D b, std::span<const double> scales,
                                             std::size_t fft_length) {
    require(!g.values.empty(), "stockwell_fft: empty input");
    require(b.count >= 1, "stockwell_fft: empty offset grid");
    require(std::abs(b.step - g.dx) <= 1e-12 * g.dx,
            "stockwell_fft: offset step must equal the sample step");
    const double off = (g.x0 - b.start) / g.dx;
    const long ioff = std::lround(off);
    require(std::abs(off - double(ioff)) < 1e-6,
            "stockwell_fft: offsets are not on the sample lattice");
    for (double a : scales) require(a != 0.0, "stockwell_fft: scale must be nonzero");
    const double dx = g.dx;
    // Each scale gets the shortest length that keeps its own window tail from
    // wrapping, rounded to a power of two so that scales share forward transforms.
    std::vector<std::size_t> len(scales.size());
    for (std::size_t k = 0; k < scales.size(); ++k)
        len[k] = fft_length ? fft_length
                            : fft::next_pow2(detail::periodic_length(g.x0, g.at(g.values.size() - 1), b.start,
                                                                     b.last(), psi.radius(), std::abs(scales[k]), dx));

    std::vector<StockwellRow> rows(scales.size());
    std::vector<cplx> G, H;
    std::vector<std::size_t> done;
    for (std::size_t k0 = 0; k0 < scales.size(); ++k0) {
        const std::size_t M = len[k0];
        if (std::find(done.begin(), done.end(), M) != done.end()) continue;
        done.push_back(M);
        require(M >= b.count && M >= g.values.size(), "stockwell_fft: transform length too short");
        // Index n <-> position b.start + n dx.
        G.assign(M, cplx{});
        for (std::size_t m = 0; m < g.values.size(); ++m) {
            const long n = ((long(m) + ioff) % long(M) + long(M)) % long(M);
            G[std::size_t(n)] += g.values[m];
        }
        fft::transform(G, -1);
        const double dxi = two_pi / (double(M) * dx);
        const double scale = std::pow(two_pi, -1.5) * two_pi / double(M);
        for (std::size_t k = k0; k < scales.size(); ++k) {
            if (len[k] != M) continue;
            const double a = scales[k];
            long l_lo, l_hi;
            detail::scale_band(a, psi, dxi, l_lo, l_hi);
            require(l_hi - l_lo + 1 <= long(M),
                    "stockwell_fft: window band wider than the sampling band");
            H.assign(M, cplx{});
            for (long l = l_lo; l <= l_hi; ++l) {
                const std::size_t q = std::size_t((l % long(M) + long(M)) % long(M));
                H[q] = G[q] * std::conj(psi.spectrum(double(l) * dxi / a - 1.0));
            }
            fft::transform(H, +1);
            StockwellRow row{a, b, std::vector<cplx>(b.count)};
            for (std::size_t j = 0; j < b.count; ++j)
                row.values[j] = H[j] * std::polar(scale, -a * b.at(j));
            rows[k] = std::move(row);
        }
    }
    return rows;
}

StockwellRow stockwell_fft(const Sampled1D& g, const Window1D& psi, UniformGrid1D b, double a) {
    const double s[1] = {a};
    return std::move(stockwell_fft_rows(g, psi, b, s).front());
}

} // namespace dirstock
