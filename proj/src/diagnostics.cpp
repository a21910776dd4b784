#include "dirstock/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dirstock/radon.hpp"

namespace dirstock {
namespace {

// Central difference of order 0..4 along one axis, spacing h, reach of the stencil in
// samples returned through `reach`. get(d) reads the sample d steps away.
template <class Get>
cplx central(int order, double h, const Get& get) {
    switch (order) {
    case 0: return get(0);
    case 1: return (get(1) - get(-1)) / (2 * h);
    case 2: return (get(1) - 2.0 * get(0) + get(-1)) / (h * h);
    case 3: return (get(2) - 2.0 * get(1) + 2.0 * get(-1) - get(-2)) / (2 * h * h * h);
    case 4: return (get(2) - 4.0 * get(1) + 6.0 * get(0) - 4.0 * get(-1) + get(-2)) / (h * h * h * h);
    }
    throw InvalidArgument("finite difference order above 4");
}

int reach(int order) { return order <= 2 ? (order ? 1 : 0) : 2; }

double rho_m_at_stride(const SignalGrid2D& phi, int m, std::size_t st) {
    const long nx = long(phi.nx), ny = long(phi.ny), S = long(st);
    const long margin = long(reach(m)) * S;
    double best = 0;
    for (long iy = margin; iy < ny - margin; iy += S) {
        for (long ix = margin; ix < nx - margin; ix += S) {
            double mx = 0;
            for (int a = 0; a <= m; ++a)
                for (int b = 0; a + b <= m; ++b) {
                    auto gy = [&](int dyv) {
                        auto gx = [&](int dxv) {
                            return phi.values[std::size_t((iy + dyv * S) * nx + ix + dxv * S)];
                        };
                        return central(a, phi.dx * double(S), gx);
                    };
                    mx = std::max(mx, std::abs(central(b, phi.dy * double(S), gy)));
                }
            const double r = std::hypot(phi.x(std::size_t(ix)), phi.y(std::size_t(iy)));
            best = std::max(best, std::pow(1 + r, m) * mx);
        }
    }
    return best;
}

double rel_delta(double fine, double coarse) {
    const double d = std::max(std::abs(fine), std::abs(coarse));
    return d > 0 ? std::abs(fine - coarse) / d : 0.0;
}

double y_window(const CoefficientVolume& Phi, int s, int r, int l, int m, int k, double b_lo,
                double b_hi, double a_lo, double a_hi, std::size_t st) {
    const auto& ax = Phi.axes;
    const long na = long(ax.n_angles()), nb = long(ax.n_offsets()), nk = long(ax.n_scales());
    const long K = nk / 2, S = long(st);
    const double db = ax.offset_step() * double(S);
    const double dth = ax.angle_step() * double(S);
    if (na % S != 0) return 0; // periodic differences need whole strides
    auto val = [&](long i, long j, long kk) {
        const long ii = ((i % na) + na) % na;
        return Phi.values[std::size_t((ii * nb + j) * nk + kk)];
    };
    const long jm = long(reach(m)) * S, km = long(l ? 1 : 0) * S;
    double best = 0;
    for (long i = 0; i < na; i += S) {
        for (long j = jm; j < nb - jm; j += S) {
            const double b = ax.offsets[std::size_t(j)];
            if (b < b_lo || b > b_hi) continue;
            for (long kk = 0; kk < nk; kk += (kk + S < nk ? S : 1)) {
                // Stay inside one sign branch for a-differences.
                const long first = kk < K ? 0 : K, last = kk < K ? K - 1 : nk - 1;
                if (kk - km < first || kk + km > last) continue;
                const double a = ax.scales[std::size_t(kk)];
                if (std::abs(a) < a_lo || std::abs(a) > a_hi) continue;
                auto theta_part = [&](long jj, long kq) {
                    if (k == 0) return val(i, jj, kq);
                    return (val(i + S, jj, kq) - 2.0 * val(i, jj, kq) + val(i - S, jj, kq)) / (dth * dth);
                };
                auto b_part = [&](long kq) {
                    auto g = [&](int d) { return theta_part(j + d * S, kq); };
                    return central(m, db, g);
                };
                cplx d;
                if (l == 0) {
                    d = b_part(kk);
                } else {
                    const double am = ax.scales[std::size_t(kk - km)], ap = ax.scales[std::size_t(kk + km)];
                    const double hm = a - am, hp = ap - a;
                    const cplx fm = b_part(kk - km), f0 = b_part(kk), fp = b_part(kk + km);
                    if (l == 1)
                        d = (hm * hm * fp - hp * hp * fm + (hp * hp - hm * hm) * f0) / (hp * hm * (hp + hm));
                    else
                        d = 2.0 * ((fp - f0) / hp - (f0 - fm) / hm) / (hp + hm);
                }
                const double wgt = std::pow(1 + b * b, 0.5 * r) *
                                   (std::pow(std::abs(a), s) + std::pow(std::abs(a), -s));
                best = std::max(best, wgt * std::abs(d));
            }
        }
    }
    return best;
}

std::string grid_text(const SignalGrid2D& g) {
    std::ostringstream o;
    o << g.nx << "x" << g.ny << " dx=" << g.dx << " dy=" << g.dy;
    return o.str();
}

std::string axes_text(const CoefficientAxes& ax) {
    std::ostringstream o;
    o << ax.n_angles() << "x" << ax.n_offsets() << "x" << ax.n_scales();
    return o.str();
}

} // namespace

SeminormEstimate seminorm_rho_m(const SignalGrid2D& phi, int m) {
    require(m >= 0 && m <= 4, "seminorm_rho_m: order must be in 0..4");
    SeminormEstimate e;
    e.indices = "m=" + std::to_string(m);
    e.value = rho_m_at_stride(phi, m, 1);
    e.refinement_delta = rel_delta(e.value, rho_m_at_stride(phi, m, 2));
    e.grid = grid_text(phi);
    return e;
}

double seminorm_Y_window(const CoefficientVolume& Phi, int s, int r, int l, int m, int k,
                         double b_lo, double b_hi, double a_lo, double a_hi) {
    require(l >= 0 && l <= 2 && m >= 0 && m <= 2 && k >= 0 && k <= 1,
            "seminorm_Y: derivative caps are l, m <= 2 and k <= 1");
    require(Phi.values.size() == Phi.axes.size(), "seminorm_Y: value array does not match axes");
    return y_window(Phi, s, r, l, m, k, b_lo, b_hi, a_lo, a_hi, 1);
}

SeminormEstimate seminorm_Y(const CoefficientVolume& Phi, int s, int r, int l, int m, int k) {
    SeminormEstimate e;
    e.value = seminorm_Y_window(Phi, s, r, l, m, k, -INFINITY, INFINITY, 0, INFINITY);
    e.refinement_delta =
        rel_delta(e.value, y_window(Phi, s, r, l, m, k, -INFINITY, INFINITY, 0, INFINITY, 2));
    std::ostringstream o;
    o << "s=" << s << " r=" << r << " l=" << l << " m=" << m << " k=" << k;
    e.indices = o.str();
    e.grid = axes_text(Phi.axes);
    return e;
}

SeminormEstimate seminorm_dot(const SignalGrid2D& phi, int N, int q, int k, PolarGrid polar) {
    require(q >= 0 && q <= 2 && k >= 0 && k <= 1, "seminorm_dot: caps are q <= 2 and k <= 1");
    require(N >= 0, "seminorm_dot: N must be nonnegative");
    require(polar.angles >= 4 && polar.w_count >= 5 && polar.w_max > 0, "seminorm_dot: polar grid too small");
    SliceEvaluator ev(phi, SliceMode::Fast, 8);
    const double dw = polar.w_max / double(polar.w_count - 1);
    const std::size_t na = polar.angles, nw = polar.w_count;
    std::vector<cplx> table(na * nw);
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < na; ++i)
        ev.evaluate(two_pi * double(i) / double(na), {0.0, dw, nw},
                    std::span<cplx>(table.data() + i * nw, nw));
    auto eval = [&](std::size_t st) {
        const long S = long(st), A = long(na);
        if (A % S) return 0.0;
        const double h = dw * double(S), dth = two_pi / double(na) * double(S);
        auto get = [&](long i, long j) { return table[std::size_t(((i % A) + A) % A) * nw + std::size_t(j)]; };
        double best = 0;
        const long wm = long(reach(q)) * S;
        for (long i = 0; i < A; i += S)
            for (long j = wm; j < long(nw) - wm; j += S) {
                auto th = [&](long jj) {
                    if (k == 0) return get(i, jj);
                    return (get(i + S, jj) - 2.0 * get(i, jj) + get(i - S, jj)) / (dth * dth);
                };
                auto g = [&](int d) { return th(j + d * S); };
                const double w = double(j) * dw;
                best = std::max(best, std::pow(w, N) * std::abs(central(q, h, g)));
            }
        return best;
    };
    SeminormEstimate e;
    std::ostringstream o;
    o << "N=" << N << " q=" << q << " k=" << k;
    e.indices = o.str();
    e.value = eval(1);
    e.refinement_delta = rel_delta(e.value, eval(2));
    e.grid = grid_text(phi) + "; polar " + std::to_string(na) + "x" + std::to_string(nw);
    return e;
}

const DecayReport::Entry& DecayReport::at(int s, int r) const {
    for (const auto& e : entries)
        if (e.s == s && e.r == r) return e;
    throw InvalidArgument("decay_report: no entry for the requested (s, r)");
}

std::vector<DecayReport::Entry> DecayReport::flagged(double limit) const {
    std::vector<Entry> out;
    for (const auto& e : entries)
        if (e.growth > limit) out.push_back(e);
    return out;
}

DecayReport decay_report(const CoefficientVolume& Phi) {
    const auto& ax = Phi.axes;
    DecayReport rep;
    const double b0 = ax.offsets.front(), b1 = ax.offsets.back();
    const double bc = 0.5 * (b0 + b1), bh = 0.5 * (b1 - b0);
    const double a_min = ax.scales[ax.per_sign()], a_max = ax.scales.back();
    const double shrink = std::min(2.0, std::pow(a_max / a_min, 0.25));
    rep.inner_b_lo = bc - 0.5 * bh;
    rep.inner_b_hi = bc + 0.5 * bh;
    rep.inner_a_lo = a_min * shrink * (1 - 1e-12);
    rep.inner_a_hi = a_max / shrink * (1 + 1e-12);
    for (int s = 0; s <= 2; ++s)
        for (int r = 0; r <= 2; ++r) {
            DecayReport::Entry e;
            e.s = s;
            e.r = r;
            e.full = seminorm_Y_window(Phi, s, r, 0, 0, 0, -INFINITY, INFINITY, 0, INFINITY);
            e.inner = seminorm_Y_window(Phi, s, r, 0, 0, 0, rep.inner_b_lo, rep.inner_b_hi,
                                        rep.inner_a_lo, rep.inner_a_hi);
            e.growth = e.inner > 0 ? e.full / e.inner : (e.full > 0 ? INFINITY : 1.0);
            rep.entries.push_back(e);
        }
    return rep;
}

} // namespace dirstock
