#include "dirstock/synthesis.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <sstream>

#include "dirstock/fft.hpp"

namespace dirstock {

VerificationReport VerificationReport::compare(cplx lhs, cplx rhs, std::string summary) {
    VerificationReport r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_error = std::abs(lhs - rhs);
    r.rel_error = r.abs_error / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    r.summary = std::move(summary);
    return r;
}

namespace {

std::string describe(const SignalGrid2D& f, const CoefficientAxes& ax) {
    std::ostringstream s;
    s << "grid " << f.nx << "x" << f.ny << " dx=" << f.dx << "; axes " << ax.n_angles()
      << " angles, " << ax.n_offsets() << " offsets in [" << ax.offsets.front() << ", "
      << ax.offsets.back() << "], " << ax.per_sign() << " scales per sign in ["
      << ax.scales[ax.per_sign()] << ", " << ax.scales.back() << "]";
    return s.str();
}

// One (angle, scale) ridge term: H(p) = e^{-i xi_c p} G(p) and two derivatives on a
// fine grid p_n = q0 + n dp.
struct Ridge {
    double q0 = 0, dp = 1, xi_c = 0;
    std::size_t count = 0;
    std::vector<cplx> h, h1, h2;

    cplx operator()(double p) const {
        const double s = (p - q0) / dp;
        const auto n = std::size_t(s);
        if (!(s >= 0) || n + 1 >= count) return {};
        return hermite5(h[n], h[n + 1], h1[n], h1[n + 1], h2[n], h2[n + 1], s - double(n), dp);
    }
};

} // namespace

SignalGrid2D synthesize(const CoefficientVolume& Phi, const Window1D& psi,
                        const SignalGrid2D& target, const SynthesisOptions& opt) {
    const auto& ax = Phi.axes;
    require(Phi.values.size() == ax.size(), "synthesize: value array does not match axes");
    require(ax.n_offsets() >= 2 && ax.offset_step() > 0, "synthesize: degenerate offset axis");
    require(opt.resolution > 0 && opt.resolution < 1, "synthesize: resolution must be in (0, 1)");
    target.validate();
    for (const auto& v : Phi.values)
        require(std::isfinite(v.real()) && std::isfinite(v.imag()), "synthesize: non-finite coefficient");

    const std::size_t na = ax.n_angles(), nb = ax.n_offsets(), nk = ax.n_scales();
    const double db = ax.offset_step(), b_lo = ax.offsets.front(), b_hi = ax.offsets.back();
    const double lo = psi.support_lo(), hi = psi.support_hi();
    const double R = psi.radius();

    // Bound on |x.u| over the target, the same for every angle.
    const double pc = std::hypot(target.center_x(), target.center_y());
    const double reach = pc + std::hypot(0.5 * double(target.nx - 1) * target.dx,
                                         0.5 * double(target.ny - 1) * target.dy);

    // Scales of one sign within an octave are summed in frequency and interpolated
    // once per pixel. The period must keep every group member's tail from wrapping.
    struct Group {
        std::vector<std::size_t> ks;
        std::size_t Mb = 0, Q = 1;
        double dxi = 0, dp = 0;
        long m_lo = LONG_MAX, m_hi = LONG_MIN, m_c = 0;
    };
    std::vector<Group> groups;
    {
        double a_small = INFINITY;
        for (double a : ax.scales) a_small = std::min(a_small, std::abs(a));
        std::vector<std::pair<int, int>> keys;
        for (std::size_t k = 0; k < nk; ++k) {
            const double a = ax.scales[k];
            const std::pair<int, int> key{a > 0 ? 1 : -1, int(std::floor(std::log2(std::abs(a) / a_small) + 1e-9))};
            auto it = std::find(keys.begin(), keys.end(), key);
            if (it == keys.end()) {
                keys.push_back(key);
                groups.emplace_back();
                it = keys.end() - 1;
            }
            groups[std::size_t(it - keys.begin())].ks.push_back(k);
        }
    }
    for (Group& g : groups) {
        double a_lo = INFINITY;
        for (std::size_t k : g.ks) a_lo = std::min(a_lo, std::abs(ax.scales[k]));
        const double tail = R / a_lo;
        const double T = tail + std::max(b_hi + reach, reach - b_lo) + 3 * db;
        g.Mb = fft::next_fast(std::max<std::size_t>(std::size_t(std::ceil(T / db)) + 1, nb));
        g.dxi = two_pi / (double(g.Mb) * db);
        for (std::size_t k : g.ks) {
            double e0 = ax.scales[k] * (1 + lo), e1 = ax.scales[k] * (1 + hi);
            if (e0 > e1) std::swap(e0, e1);
            g.m_lo = std::min(g.m_lo, long(std::ceil(e0 / g.dxi)));
            g.m_hi = std::max(g.m_hi, long(std::floor(e1 / g.dxi)));
        }
        g.m_c = (g.m_lo + g.m_hi) / 2;
        const double half = double(std::max(g.m_hi - g.m_c, g.m_c - g.m_lo)) * g.dxi;
        g.Q = fft::next_fast(std::max<std::size_t>(1, std::size_t(std::ceil(db * half / opt.resolution))));
        g.dp = db / double(g.Q);
    }

    // Fixed chunking of angles keeps the summation order independent of threads.
    const std::size_t chunks = std::min<std::size_t>(na, 16);
    std::vector<std::vector<cplx>> partial(chunks, std::vector<cplx>(target.values.size()));

#pragma omp parallel for schedule(dynamic)
    for (std::size_t ch = 0; ch < chunks; ++ch) {
        auto& acc = partial[ch];
        std::vector<cplx> Phat, X, X1, X2;
        for (std::size_t i = ch; i < na; i += chunks) {
            const double c = std::cos(ax.angles[i]), s = std::sin(ax.angles[i]);
            const double q0 = -reach - db;
            for (const Group& g : groups) {
                if (g.m_hi < g.m_lo) continue;
                const std::size_t M = g.Mb * g.Q;
                bool any = false;
                X.assign(M, cplx{});
                X1.assign(M, cplx{});
                X2.assign(M, cplx{});
                for (std::size_t k : g.ks) {
                    const double a = ax.scales[k], aa = std::abs(a);
                    bool nonzero = false;
                    for (std::size_t j = 0; j < nb && !nonzero; ++j) nonzero = Phi.at(i, j, k) != cplx{};
                    if (!nonzero) continue;
                    any = true;
                    // G_hat(m dxi) = e^{-i m dxi b_lo} FFT[w_j Phi_j e^{i a b_j}](m) psi_hat(m dxi/a - 1) / |a|
                    Phat.assign(g.Mb, cplx{});
                    for (std::size_t j = 0; j < nb; ++j)
                        Phat[j] = Phi.at(i, j, k) * std::polar(ax.offset_weight(j), a * ax.offsets[j]);
                    fft::transform(Phat, -1);
                    const double coef = aa / two_pi * ax.angle_scale_weight(k);
                    double e0 = a * (1 + lo), e1 = a * (1 + hi);
                    if (e0 > e1) std::swap(e0, e1);
                    const long m0 = long(std::ceil(e0 / g.dxi)), m1 = long(std::floor(e1 / g.dxi));
                    for (long m = m0; m <= m1; ++m) {
                        const double xi = double(m) * g.dxi;
                        const double nu = double(m - g.m_c) * g.dxi;
                        const cplx v = Phat[std::size_t((m % long(g.Mb) + long(g.Mb)) % long(g.Mb))] *
                                       psi.spectrum(xi / a - 1.0) *
                                       std::polar(coef / aa, -xi * b_lo + nu * q0);
                        const std::size_t q = std::size_t(((m - g.m_c) % long(M) + long(M)) % long(M));
                        X[q] += v;
                        X1[q] += cplx(0, nu) * v;
                        X2[q] += -nu * nu * v;
                    }
                }
                if (!any) continue;
                fft::transform(X, +1);
                fft::transform(X1, +1);
                fft::transform(X2, +1);
                const double scale = g.dxi / two_pi;
                const std::size_t count = std::min(M, std::size_t(std::ceil((reach - q0) / g.dp)) + 3);
                Ridge r{q0, g.dp, double(g.m_c) * g.dxi, count, {}, {}, {}};
                r.h.assign(X.begin(), X.begin() + std::ptrdiff_t(count));
                r.h1.assign(X1.begin(), X1.begin() + std::ptrdiff_t(count));
                r.h2.assign(X2.begin(), X2.begin() + std::ptrdiff_t(count));
                for (std::size_t n = 0; n < count; ++n) {
                    r.h[n] *= scale;
                    r.h1[n] *= scale;
                    r.h2[n] *= scale;
                }

                // Accumulate e^{i xi_c p} H(p) with p = x.u, phase by recurrence along rows.
                const cplx step = std::polar(1.0, r.xi_c * target.dx * c);
                for (std::size_t iy = 0; iy < target.ny; ++iy) {
                    const double p0 = target.x0 * c + target.y(iy) * s;
                    cplx rot;
                    cplx* row = acc.data() + iy * target.nx;
                    for (std::size_t ix = 0; ix < target.nx; ++ix) {
                        if (ix % 32 == 0) rot = std::polar(1.0, r.xi_c * (p0 + target.dx * c * double(ix)));
                        row[ix] += rot * r(p0 + target.dx * c * double(ix));
                        rot *= step;
                    }
                }
            }
        }
    }
    SignalGrid2D out = target.zeros_like();
    for (const auto& part : partial)
        for (std::size_t q = 0; q < out.values.size(); ++q) out.values[q] += part[q];
    return out;
}

std::pair<SignalGrid2D, VerificationReport> reconstruct(const SignalGrid2D& f,
                                                        const Window1D& psi,
                                                        const Window1D& eta,
                                                        const CoefficientAxes& axes,
                                                        const DstOptions& opt) {
    bool neg = false, pos = false;
    for (double a : axes.scales) (a < 0 ? neg : pos) = true;
    require(neg && pos, "reconstruct: scale axis must contain both signs");
    const auto C = admissibility_constant(psi, eta, axes.n);
    auto vol = dst_fourier(f, psi, axes, opt);
    SignalGrid2D rec = synthesize(vol, eta, f);
    for (auto& v : rec.values) v /= C.value;
    double num = 0;
    for (std::size_t q = 0; q < f.values.size(); ++q) num += std::norm(rec.values[q] - f.values[q]);
    num = std::sqrt(num * f.dx * f.dy);
    const double nf = std::sqrt(norm2_R2(f)), nr = std::sqrt(norm2_R2(rec));
    VerificationReport rep;
    rep.lhs = nf;
    rep.rhs = nr;
    rep.abs_error = num;
    rep.rel_error = num / std::max(nf, 1e-300);
    if (nf == 0 && num == 0) rep.rel_error = 0;
    rep.summary = "reconstruction; " + describe(f, axes);
    return {std::move(rec), rep};
}

VerificationReport parseval_check(const SignalGrid2D& f, const SignalGrid2D& h,
                                  const Window1D& psi, const Window1D& eta,
                                  const CoefficientAxes& axes, const DstOptions& opt) {
    require(f.same_geometry(h), "parseval_check: grids differ");
    const auto C = admissibility_constant(psi, eta, axes.n);
    const cplx lhs = inner_product_R2(f, h);
    cplx y;
    if (&f == &h) {
        auto v = dst_fourier_multi(f, {&psi, &eta}, axes, opt);
        y = inner_product_Y(v[0], v[1]);
    } else {
        y = inner_product_Y(dst_fourier(f, psi, axes, opt), dst_fourier(h, eta, axes, opt));
    }
    return VerificationReport::compare(lhs, y / C.value, "parseval; " + describe(f, axes));
}

VerificationReport transpose_check(const SignalGrid2D& f, const Window1D& psi,
                                   const CoefficientVolume& Phi, const DstOptions& opt) {
    CoefficientVolume conjPhi = Phi;
    for (auto& v : conjPhi.values) v = std::conj(v);
    const SignalGrid2D syn = synthesize(conjPhi, psi, f);
    const cplx lhs = inner_product_R2(f, syn);
    const cplx rhs = inner_product_Y(dst_fourier(f, psi, Phi.axes, opt), conjPhi);
    return VerificationReport::compare(lhs, rhs, "transpose; " + describe(f, Phi.axes));
}

cplx scale_multiplier(const Window1D& psi, const Window1D& eta, const CoefficientAxes& axes,
                      cplx C, double rho) {
    if (rho == 0) return {};
    auto S = [&](double xi) {
        cplx s{};
        for (std::size_t k = 0; k < axes.n_scales(); ++k) {
            const double a = axes.scales[k];
            s += axes.scale_weight(k) * std::pow(std::abs(a), axes.n - 2) *
                 std::conj(psi.spectrum(xi / a - 1.0)) * eta.spectrum(xi / a - 1.0);
        }
        return s;
    };
    return (S(rho) + S(-rho)) / (2.0 * pi * C * std::pow(std::abs(rho), axes.n - 1));
}

double scale_truncation_error(const SignalGrid2D& f, const Window1D& psi, const Window1D& eta,
                              const CoefficientAxes& axes) {
    const auto C = admissibility_constant(psi, eta, axes.n);
    std::vector<cplx> F = f.values;
    fft::transform2d(F, f.ny, f.nx, -1);
    double num = 0, den = 0;
    for (std::size_t ky = 0; ky < f.ny; ++ky) {
        const long sy = ky <= f.ny / 2 ? long(ky) : long(ky) - long(f.ny);
        for (std::size_t kx = 0; kx < f.nx; ++kx) {
            const long sx = kx <= f.nx / 2 ? long(kx) : long(kx) - long(f.nx);
            const double wx = two_pi * double(sx) / (double(f.nx) * f.dx);
            const double wy = two_pi * double(sy) / (double(f.ny) * f.dy);
            const double e = std::norm(F[ky * f.nx + kx]);
            if (e == 0) continue;
            const cplx m = scale_multiplier(psi, eta, axes, C.value, std::hypot(wx, wy));
            num += e * std::norm(m - 1.0);
            den += e;
        }
    }
    return den > 0 ? std::sqrt(num / den) : 0.0;
}

} // namespace dirstock
