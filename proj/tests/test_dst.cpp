#include <doctest.h>

#include <cmath>

#include "dirstock/dst.hpp"
#include "dirstock/presets.hpp"
#include "dirstock/reference.hpp"
#include "dirstock/signals.hpp"
#include "dirstock/stockwell1d.hpp"
#include "helpers.hpp"

using namespace dirstock;

namespace {

const Window1D& bump11() {
    static const Window1D w = freq_bump_window(1, 1);
    return w;
}

const SignalGrid2D& reference_input() {
    static const SignalGrid2D f = presets::signal().sample(presets::geometry());
    return f;
}

CoefficientAxes small_axes(std::size_t na = 16, double breach = 4, std::size_t per_sign = 6) {
    const auto nb = std::size_t(std::llround(2 * breach / presets::grid_dx)) + 1;
    return make_coefficient_axes(na, {-breach, breach, nb}, {0.5, 6.0, per_sign});
}

} // namespace

TEST_CASE("dst: zero input gives zero volumes on every route") {
    const auto z = presets::geometry().zeros_like();
    const auto ax = small_axes(8, 2, 3);
    for (const auto& v : dst_fourier(z, bump11(), ax).values) CHECK(v == cplx{});
    for (const auto& v : dst_radon(z, bump11(), ax).values) CHECK(v == cplx{});
    CHECK(dst_direct(z, bump11(), 0.3, 0.5, 2.0) == cplx{});
}

TEST_CASE("dst_fourier: full 8x8x6 volume against the direct sum") {
    const auto ax = make_coefficient_axes(8, {-2, 2, 8}, {0.5, 4, 3});
    const auto& f = reference_input();
    const auto fast = dst_fourier(f, bump11(), ax);
    const auto slow = reference::dst_direct_volume(f, bump11(), ax);
    CHECK(relative_rms(fast.values, slow.values) < 1e-3);
}

TEST_CASE("dst_radon: agrees with dst_fourier on a band-limited input") {
    const auto ax = small_axes();
    const auto& f = reference_input();
    const auto a = dst_radon(f, bump11(), ax), b = dst_fourier(f, bump11(), ax);
    CHECK(relative_rms(a.values, b.values) < 1e-3);
}

TEST_CASE("dst: projection route from oracle pieces matches the direct sum") {
    // (2 pi)^{-1/2} S_psi(R f_u) with both factors computed by plain quadrature.
    const auto& f = reference_input();
    const UniformGrid1D p{-12, 0.0625, 385};
    Sampled1D g{p.start, p.step, {}};
    for (double th : {0.4, 2.0}) {
        g.values = radon_direct(f, th, p).values;
        for (double a : {-3.0, 1.2, 4.5})
            for (double b : {-0.5, 0.3}) {
                const cplx want = dst_direct(f, bump11(), th, b, a);
                const cplx got = stockwell_direct(g, bump11(), b, a) / std::sqrt(two_pi);
                CHECK(std::abs(got - want) < 1e-3 * std::abs(want) + 1e-9);
            }
    }
}

TEST_CASE("dst: every route is linear") {
    const auto ax = small_axes(8, 2, 3);
    const auto& f = reference_input();
    SignalGrid2D g = f;
    const cplx c(0.3, -1.7);
    for (auto& v : g.values) v *= c;
    for (int route = 0; route < 2; ++route) {
        const auto A = route ? dst_radon(f, bump11(), ax) : dst_fourier(f, bump11(), ax);
        const auto B = route ? dst_radon(g, bump11(), ax) : dst_fourier(g, bump11(), ax);
        std::vector<cplx> cA(A.values);
        for (auto& v : cA) v *= c;
        CHECK(relative_rms(B.values, cA) < 1e-13);
    }
    CHECK(std::abs(dst_direct(g, bump11(), 1.0, 0.2, 2.0) - c * dst_direct(f, bump11(), 1.0, 0.2, 2.0)) <
          1e-13 * std::abs(dst_direct(g, bump11(), 1.0, 0.2, 2.0)));
}

TEST_CASE("dst_radon: unit disk looks the same along both axes") {
    // Half-cell shift makes the sample set symmetric about the origin.
    auto f = make_grid(128, 1.0 / 32);
    f.x0 += 0.5 * f.dx;
    f.y0 += 0.5 * f.dy;
    for (std::size_t iy = 0; iy < f.ny; ++iy)
        for (std::size_t ix = 0; ix < f.nx; ++ix) {
            const double x = f.x(ix), y = f.y(iy);
            f.at(ix, iy) = (x * x + y * y <= 1.0) ? 1.0 : 0.0;
        }
    const auto ax = make_coefficient_axes(4, {-1.5, 1.5, 97}, {1, 8, 4});
    const auto v = dst_radon(f, bump11(), ax);
    std::vector<cplx> c0, c1;
    for (std::size_t j = 0; j < ax.n_offsets(); ++j)
        for (std::size_t k = 0; k < ax.n_scales(); ++k) {
            c0.push_back(v.at(0, j, k));
            c1.push_back(v.at(1, j, k));
        }
    CHECK(testing::max_abs(c0) > 1e-3);
    CHECK(relative_rms(c1, c0) < 1e-10);
}

TEST_CASE("dst: spectral support law") {
    // Narrow atoms at |nu| = 8: the spectrum is below e^{-21} of its peak for |xi| < 1.5
    // and |xi| > 16, so the scales 0.5 and 16 see nothing.
    const auto s = annulus_signal(3, 8.0, 1.0, 0.5, 3);
    const auto geom = make_grid(256, 1.0 / 16);
    const auto f = s.sample(geom);
    const auto ax = make_coefficient_axes(16, {-6, 6, 97}, {0.5, 16, 6});
    const auto v = dst_fourier(f, bump11(), ax);
    const double peak = testing::max_abs(v.values);
    REQUIRE(peak > 0.1);
    for (std::size_t i = 0; i < ax.n_angles(); ++i) {
        const double c = std::cos(ax.angles[i]), sn = std::sin(ax.angles[i]);
        for (std::size_t k = 0; k < ax.n_scales(); ++k) {
            const double a = ax.scales[k];
            // |DS| <= (2 pi)^{-2} int |f_hat(xi u)| |psi_hat(xi/a - 1)| dxi, by the analytic spectrum
            double bound = 0;
            const int N = 4000;
            const double lo = std::min(a, 3 * a), hi = std::max(a, 3 * a), h = (hi - lo) / N;
            for (int q = 0; q < N; ++q) {
                const double xi = lo + (q + 0.5) * h;
                bound += std::abs(s.spectrum(xi * c, xi * sn)) * std::abs(bump11().spectrum(xi / a - 1));
            }
            bound *= h / (two_pi * two_pi);
            double m = 0;
            for (std::size_t j = 0; j < ax.n_offsets(); ++j) m = std::max(m, std::abs(v.at(i, j, k)));
            CHECK(m <= 1.01 * bound + 1e-10 * peak);
            if (std::abs(a) == 0.5 || std::abs(a) == 16) CHECK(m < 1e-8 * peak);
        }
    }
}

TEST_CASE("dst: axes past the Nyquist band or with coarse offsets are rejected") {
    const auto& f = reference_input();
    const auto wide = make_coefficient_axes(8, {-2, 2, 33}, {0.5, 9, 3});
    CHECK_THROWS_AS(dst_fourier(f, bump11(), wide), InvalidArgument);
    CHECK_THROWS_AS(dst_radon(f, bump11(), wide), InvalidArgument);
    const auto coarse = make_coefficient_axes(8, {-4, 4, 5}, {0.5, 6, 3});
    CHECK_THROWS_AS(dst_fourier(f, bump11(), coarse), InvalidArgument);
    const auto flat = make_coefficient_axes(8, {0, 0, 2}, {0.5, 6, 3});
    CHECK_THROWS_AS(dst_fourier(f, bump11(), flat), InvalidArgument);
}

TEST_CASE("dst_fourier_multi: one volume per window, each equal to a single transform") {
    const auto ax = small_axes(8, 2, 3);
    const auto& f = reference_input();
    const auto w2 = freq_bump_window(1.2, 0.8);
    const auto vs = dst_fourier_multi(f, {&bump11(), &w2}, ax);
    REQUIRE(vs.size() == 2);
    // The shared transform length follows the widest window, so the frequency lattice
    // differs from a single transform's and the two agree to quadrature accuracy only.
    CHECK(relative_rms(vs[0].values, dst_fourier(f, bump11(), ax).values) < 1e-8);
    CHECK(relative_rms(vs[1].values, dst_fourier(f, w2, ax).values) < 1e-8);
}

TEST_CASE("dst_distribution: empty derivative is dst_fourier") {
    const auto ax = small_axes(8, 2, 3);
    const auto& f = reference_input();
    DistributionRep rep;
    rep.terms.push_back({{0, 0}, f});
    CHECK(dst_distribution(rep, bump11(), ax).values == dst_fourier(f, bump11(), ax).values);
}

TEST_CASE("dst_distribution: first derivative against the differentiated grid") {
    const auto ax = small_axes();
    const auto& f = reference_input();
    for (auto alpha : {MultiIndex{1, 0}, MultiIndex{0, 1}}) {
        DistributionRep rep;
        rep.terms.push_back({alpha, f});
        const auto got = dst_distribution(rep, bump11(), ax);
        const auto want = dst_fourier(spectral_derivative(f, alpha.a1, alpha.a2), bump11(), ax);
        CHECK(relative_rms(got.values, want.values) < 1e-3);
    }
}

TEST_CASE("dst_distribution: mixed derivative equals the nested single-derivative formula") {
    const auto ax = small_axes();
    const auto& f = reference_input();
    DistributionRep mixed, nested;
    mixed.terms.push_back({{1, 1}, f});
    nested.terms.push_back({{1, 0}, spectral_derivative(f, 0, 1)});
    const auto a = dst_distribution(mixed, bump11(), ax);
    const auto b = dst_distribution(nested, bump11(), ax);
    CHECK(relative_rms(a.values, b.values) < 3e-3);
}

TEST_CASE("dst_distribution: sums over terms and validates the representation") {
    const auto ax = small_axes(8, 2, 3);
    const auto& f = reference_input();
    const auto g = presets::signal(99).sample(presets::geometry());
    DistributionRep both, one, two;
    both.terms = {{{1, 0}, f}, {{0, 2}, g}};
    one.terms = {{{1, 0}, f}};
    two.terms = {{{0, 2}, g}};
    const auto s = dst_distribution(both, bump11(), ax);
    auto t = dst_distribution(one, bump11(), ax).values;
    const auto u = dst_distribution(two, bump11(), ax).values;
    for (std::size_t q = 0; q < t.size(); ++q) t[q] += u[q];
    CHECK(relative_rms(s.values, t) < 1e-13);

    DistributionRep bad;
    bad.terms = {{{3, 2}, f}};
    CHECK_THROWS_AS(dst_distribution(bad, bump11(), ax), InvalidArgument);
    bad.terms = {{{-1, 0}, f}};
    CHECK_THROWS_AS(dst_distribution(bad, bump11(), ax), InvalidArgument);
    bad.terms = {{{1, 0}, f}, {{0, 0}, make_grid(64, 0.25)}};
    CHECK_THROWS_AS(dst_distribution(bad, bump11(), ax), InvalidArgument);
    CHECK_THROWS_AS(dst_distribution({}, bump11(), ax), InvalidArgument);
}

TEST_CASE("probe cells are deterministic and in range") {
    const auto ax = small_axes(8, 2, 3);
    const auto a = probe_cells(ax, 50, 9), b = probe_cells(ax, 50, 9);
    for (std::size_t q = 0; q < 50; ++q) {
        CHECK(a[q].i == b[q].i);
        CHECK(a[q].j == b[q].j);
        CHECK(a[q].k == b[q].k);
        CHECK(a[q].i < ax.n_angles());
        CHECK(a[q].j < ax.n_offsets());
        CHECK(a[q].k < ax.n_scales());
    }
}
