#include "dirstock/dst.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <map>
#include <random>

#include "dirstock/fft.hpp"
#include "dirstock/stockwell1d.hpp"

namespace dirstock {
namespace {

// Every projection of f lives in [-rho, rho], counting the spline ringing that the
// padded interpolant allows past the grid edge.
double projection_reach(const SignalGrid2D& f) {
    const double hx = 0.5 * double(f.nx - 1) * f.dx, hy = 0.5 * double(f.ny - 1) * f.dy;
    const double c = std::hypot(f.center_x(), f.center_y());
    return c + std::hypot(hx, hy) + double(Spline2D::pad + 2) * std::max(f.dx, f.dy);
}

// Shortest wrap-free length for one scale.
std::size_t scale_fft_length(const SignalGrid2D& f, double radius, const CoefficientAxes& axes,
                             double a) {
    const double rho = projection_reach(f);
    return detail::periodic_length(-rho, rho, axes.offsets.front(), axes.offsets.back(), radius,
                                   std::abs(a), axes.offset_step());
}

void warn(const DstOptions& opt, const std::string& msg) {
    if (opt.warnings) opt.warnings->push_back(msg);
}

double binom(int n, int k) {
    double r = 1;
    for (int q = 1; q <= k; ++q) r = r * double(n - k + q) / double(q);
    return r;
}

} // namespace

void check_axes_compatible(const SignalGrid2D& f, const Window1D& psi,
                           const CoefficientAxes& axes) {
    require(axes.n == 2, "dst: transforms are implemented for n = 2 only");
    require(axes.n_offsets() >= 2 && axes.offset_step() > 0, "dst: degenerate offset axis");
    const double t = std::max(std::abs(1.0 + psi.support_lo()), std::abs(1.0 + psi.support_hi()));
    const double width = psi.support_hi() - psi.support_lo();
    const double nyq = pi / std::max(f.dx, f.dy);
    for (double a : axes.scales) {
        require(std::abs(a) * t <= nyq * (1 + 1e-12),
                "dst: scale range needs frequencies beyond the grid Nyquist band");
        require(std::abs(a) * width * axes.offset_step() < two_pi,
                "dst: offset spacing too coarse for the window bandwidth");
    }
}

cplx dst_direct(const SignalGrid2D& f, const Window1D& psi, double theta, double b, double a) {
    require(a != 0.0, "dst_direct: scale must be nonzero");
    const double c = std::cos(theta), s = std::sin(theta);
    double re = 0, im = 0;
    for (std::size_t iy = 0; iy < f.ny; ++iy) {
        for (std::size_t ix = 0; ix < f.nx; ++ix) {
            const double p = f.x(ix) * c + f.y(iy) * s;
            const cplx v = f.at(ix, iy) * std::conj(psi(a * (p - b))) * std::polar(1.0, -a * p);
            re += v.real();
            im += v.imag();
        }
    }
    return cplx(re, im) * (std::abs(a) / two_pi * f.dx * f.dy);
}

std::vector<CoefficientVolume> dst_fourier_multi(const SignalGrid2D& f,
                                                 const std::vector<const Window1D*>& windows,
                                                 const CoefficientAxes& axes,
                                                 const DstOptions& opt) {
    f.validate();
    require(!windows.empty(), "dst_fourier: no windows");
    double radius = 0;
    for (const auto* w : windows) {
        check_axes_compatible(f, *w, axes);
        if (!w->s1_flag()) warn(opt, "dst_fourier: window is not S1-admissible");
        radius = std::max(radius, w->radius());
    }
    const double db = axes.offset_step();
    const double b0 = axes.offsets.front();
    const std::size_t na = axes.n_angles(), nb = axes.n_offsets(), nk = axes.n_scales();

    // Scales of one sign sharing a transform length form a group with its own
    // frequency lattice l * dxi and one slice evaluation per angle.
    struct Group {
        std::size_t M = 0;
        bool positive = true;
        double dxi = 0;
        long lo = LONG_MAX, hi = LONG_MIN;
        std::vector<std::size_t> ks;
    };
    std::vector<Group> groups;
    std::vector<std::size_t> group_of(nk);
    for (std::size_t k = 0; k < nk; ++k) {
        // Powers of two keep the number of groups, and slice evaluations, small.
        const std::size_t M = fft::next_pow2(scale_fft_length(f, radius, axes, axes.scales[k]));
        require(M >= nb, "dst_fourier: transform length too short");
        const bool positive = axes.scales[k] > 0;
        std::size_t g = 0;
        while (g < groups.size() && !(groups[g].M == M && groups[g].positive == positive)) ++g;
        if (g == groups.size()) groups.push_back({M, positive, two_pi / (double(M) * db), LONG_MAX, LONG_MIN, {}});
        groups[g].ks.push_back(k);
        group_of[k] = g;
    }

    // Per (window, scale): lattice band and the factor conj(psi_hat) e^{i xi b0}.
    struct Band {
        long lo = 0, hi = -1;
        std::vector<cplx> factor;
    };
    std::vector<std::vector<Band>> bands(windows.size(), std::vector<Band>(nk));
    for (std::size_t w = 0; w < windows.size(); ++w) {
        for (std::size_t k = 0; k < nk; ++k) {
            const double a = axes.scales[k];
            Group& gr = groups[group_of[k]];
            Band& bd = bands[w][k];
            detail::scale_band(a, *windows[w], gr.dxi, bd.lo, bd.hi);
            require(bd.hi - bd.lo + 1 <= long(gr.M), "dst_fourier: window band wider than offset band");
            for (long l = bd.lo; l <= bd.hi; ++l) {
                const double xi = double(l) * gr.dxi;
                bd.factor.push_back(std::conj(windows[w]->spectrum(xi / a - 1.0)) *
                                    std::polar(1.0, xi * b0));
            }
            if (bd.hi < bd.lo) continue;
            gr.lo = std::min(gr.lo, bd.lo);
            gr.hi = std::max(gr.hi, bd.hi);
        }
    }
    std::vector<std::vector<cplx>> phase(nk, std::vector<cplx>(nb));
    for (std::size_t k = 0; k < nk; ++k) {
        const double norm = groups[group_of[k]].dxi / (two_pi * two_pi);
        for (std::size_t j = 0; j < nb; ++j)
            phase[k][j] = std::polar(norm, -axes.scales[k] * axes.offsets[j]);
    }

    SliceEvaluator slices(f, opt.slice, opt.padding);
    std::vector<CoefficientVolume> out(windows.size(), CoefficientVolume(axes));

#pragma omp parallel
    {
        std::vector<cplx> F, H;
#pragma omp for schedule(dynamic)
        for (std::size_t i = 0; i < na; ++i) {
            const double theta = axes.angles[i];
            for (const Group& gr : groups) {
                if (gr.hi < gr.lo) continue;
                F.resize(std::size_t(gr.hi - gr.lo + 1));
                slices.evaluate(theta, {double(gr.lo) * gr.dxi, gr.dxi, F.size()}, F);
                const long M = long(gr.M);
                for (std::size_t w = 0; w < windows.size(); ++w) {
                    for (std::size_t k : gr.ks) {
                        const Band& bd = bands[w][k];
                        H.assign(gr.M, cplx{});
                        for (long l = bd.lo; l <= bd.hi; ++l) {
                            const std::size_t q = std::size_t((l % M + M) % M);
                            H[q] = F[std::size_t(l - gr.lo)] * bd.factor[std::size_t(l - bd.lo)];
                        }
                        fft::transform(H, +1);
                        auto& vol = out[w];
                        for (std::size_t j = 0; j < nb; ++j) vol.at(i, j, k) = H[j] * phase[k][j];
                    }
                }
            }
        }
    }
    return out;
}

CoefficientVolume dst_fourier(const SignalGrid2D& f, const Window1D& psi,
                              const CoefficientAxes& axes, const DstOptions& opt) {
    return std::move(dst_fourier_multi(f, {&psi}, axes, opt).front());
}

CoefficientVolume dst_radon(const SignalGrid2D& f, const Window1D& psi,
                            const CoefficientAxes& axes, const DstOptions& opt) {
    f.validate();
    check_axes_compatible(f, psi, axes);
    if (!psi.s1_flag()) warn(opt, "dst_radon: window is not S1-admissible");
    const double db = axes.offset_step();
    const double b0 = axes.offsets.front();
    // Projection samples on the offset lattice, covering every line that meets the grid.
    const double rho = projection_reach(f);
    const long j_lo = long(std::floor((-rho - b0) / db)), j_hi = long(std::ceil((rho - b0) / db));
    const UniformGrid1D pgrid{b0 + double(j_lo) * db, db, std::size_t(j_hi - j_lo + 1)};
    const UniformGrid1D bgrid{b0, db, axes.n_offsets()};
    const std::size_t na = axes.n_angles(), nb = axes.n_offsets(), nk = axes.n_scales();
    const double norm = 1.0 / std::sqrt(two_pi);

    RadonProjector proj(f, opt.interp);
    CoefficientVolume vol(axes);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < na; ++i) {
        Sampled1D g{pgrid.start, db, std::vector<cplx>(pgrid.count)};
        proj.project(axes.angles[i], pgrid, g.values);
        auto rows = stockwell_fft_rows(g, psi, bgrid, axes.scales);
        for (std::size_t k = 0; k < nk; ++k)
            for (std::size_t j = 0; j < nb; ++j) vol.at(i, j, k) = rows[k].values[j] * norm;
    }
    return vol;
}

CoefficientVolume dst_distribution(const DistributionRep& rep, const Window1D& psi,
                                   const CoefficientAxes& axes, const DstOptions& opt) {
    require(!rep.terms.empty(), "dst_distribution: empty representation");
    for (const auto& t : rep.terms) {
        require(t.alpha.a1 >= 0 && t.alpha.a2 >= 0, "dst_distribution: negative multi-index");
        require(t.alpha.order() <= max_distribution_order,
                "dst_distribution: derivative order cap exceeded");
        require(t.f.same_geometry(rep.terms.front().f), "dst_distribution: grids differ");
    }
    if (!psi.s1_flag()) warn(opt, "dst_distribution: window is not S1-admissible");
    std::map<int, Window1D> derivs;
    derivs.emplace(0, psi);
    CoefficientVolume out(axes);
    const std::size_t na = axes.n_angles(), nb = axes.n_offsets(), nk = axes.n_scales();
    for (const auto& t : rep.terms) {
        const int N = t.alpha.order();
        std::vector<const Window1D*> ws;
        for (int q = 0; q <= N; ++q) {
            if (!derivs.count(q)) derivs.emplace(q, derivative_window(psi, q));
            ws.push_back(&derivs.at(q));
        }
        auto vols = dst_fourier_multi(t.f, ws, axes, opt);
        // (-1)^N (a u)^alpha sum_q binom(N, q) (-i)^{N-q} DS_{psi^(q)} f
        std::vector<cplx> mix(std::size_t(N + 1));
        for (int q = 0; q <= N; ++q)
            mix[std::size_t(q)] = (N % 2 ? -1.0 : 1.0) * binom(N, q) * std::pow(cplx(0, -1), N - q);
        for (std::size_t i = 0; i < na; ++i) {
            const double u1 = std::cos(axes.angles[i]), u2 = std::sin(axes.angles[i]);
            const double ua = std::pow(u1, t.alpha.a1) * std::pow(u2, t.alpha.a2);
            for (std::size_t k = 0; k < nk; ++k) {
                const double pre = std::pow(axes.scales[k], N) * ua;
                for (std::size_t j = 0; j < nb; ++j) {
                    cplx acc{};
                    for (int q = 0; q <= N; ++q) acc += mix[std::size_t(q)] * vols[std::size_t(q)].at(i, j, k);
                    out.at(i, j, k) += pre * acc;
                }
            }
        }
    }
    return out;
}

std::vector<ProbeCell> probe_cells(const CoefficientAxes& axes, std::size_t count,
                                   std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<ProbeCell> cells(count);
    for (auto& c : cells) {
        c.i = std::size_t(rng() % axes.n_angles());
        c.j = std::size_t(rng() % axes.n_offsets());
        c.k = std::size_t(rng() % axes.n_scales());
    }
    return cells;
}

double probe_error(const CoefficientVolume& vol, const SignalGrid2D& f, const Window1D& psi,
                   const std::vector<ProbeCell>& cells) {
    std::vector<cplx> got(cells.size()), want(cells.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t q = 0; q < cells.size(); ++q) {
        const auto& c = cells[q];
        got[q] = vol.at(c.i, c.j, c.k);
        want[q] = dst_direct(f, psi, vol.axes.angles[c.i], vol.axes.offsets[c.j],
                             vol.axes.scales[c.k]);
    }
    return relative_rms(got, want);
}

} // namespace dirstock
