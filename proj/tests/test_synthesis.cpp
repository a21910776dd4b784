#include <doctest.h>

#include <cmath>
#include <random>

#include "dirstock/presets.hpp"
#include "dirstock/reference.hpp"
#include "dirstock/synthesis.hpp"
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

double reference_reconstruction_error(std::size_t angles) {
    const auto ax = presets::axes(angles, presets::scales_per_sign);
    return reconstruct(reference_input(), bump11(), bump11(), ax).second.rel_error;
}

} // namespace

TEST_CASE("synthesize: zero coefficients give a zero image") {
    const auto ax = make_coefficient_axes(8, {-2, 2, 17}, {0.5, 4, 4});
    const auto out = synthesize(CoefficientVolume(ax), bump11(), make_grid(32, 0.25));
    for (const auto& v : out.values) CHECK(v == cplx{});
}

TEST_CASE("synthesize: one unit cell is the weighted analysing function") {
    const auto ax = make_coefficient_axes(8, {-2, 2, 17}, {0.5, 4, 4});
    const auto geom = make_grid(64, 0.125);
    for (auto [i, j, k] : {std::array<std::size_t, 3>{3, 5, 6}, {0, 8, 0}, {6, 16, 2}}) {
        CoefficientVolume Phi(ax);
        Phi.at(i, j, k) = 1;
        const auto out = synthesize(Phi, bump11(), geom);
        const double th = ax.angles[i], b = ax.offsets[j], a = ax.scales[k];
        const double w = ax.weight(i, j, k);
        std::vector<cplx> want(out.values.size());
        for (std::size_t iy = 0; iy < geom.ny; ++iy)
            for (std::size_t ix = 0; ix < geom.nx; ++ix) {
                const double p = geom.x(ix) * std::cos(th) + geom.y(iy) * std::sin(th);
                want[iy * geom.nx + ix] = w * std::abs(a) / two_pi * bump11()(a * (p - b)) * std::polar(1.0, a * p);
            }
        CHECK(testing::max_rel(out.values, want) < 1e-8);
    }
}

TEST_CASE("synthesize: sparse random volume against the triple loop") {
    const auto ax = make_coefficient_axes(8, {-3, 3, 16}, {0.4, 5, 3});
    CoefficientVolume Phi(ax);
    std::mt19937_64 rng(17);
    std::normal_distribution<double> nd;
    for (int q = 0; q < 40; ++q) Phi.values[rng() % Phi.values.size()] = {nd(rng), nd(rng)};
    const auto geom = make_grid(48, 0.2);
    const auto fast = synthesize(Phi, bump11(), geom);
    const auto slow = reference::synthesize(Phi, bump11(), geom);
    CHECK(relative_rms(fast.values, slow.values) < 1e-8);
}

TEST_CASE("synthesize: bad options and volumes are rejected") {
    const auto ax = make_coefficient_axes(8, {-2, 2, 17}, {0.5, 4, 4});
    CoefficientVolume Phi(ax);
    SynthesisOptions opt;
    opt.resolution = 0;
    CHECK_THROWS_AS(synthesize(Phi, bump11(), make_grid(16, 0.25), opt), InvalidArgument);
    Phi.values[3] = {NAN, 0};
    CHECK_THROWS_AS(synthesize(Phi, bump11(), make_grid(16, 0.25)), InvalidArgument);
    Phi.values.pop_back();
    CHECK_THROWS_AS(synthesize(Phi, bump11(), make_grid(16, 0.25)), InvalidArgument);
}

TEST_CASE("reconstruct: zero input") {
    const auto z = presets::geometry().zeros_like();
    const auto [rec, rep] = reconstruct(z, bump11(), bump11(), presets::axes(16, 6));
    for (const auto& v : rec.values) CHECK(v == cplx{});
    CHECK(rep.rel_error == 0);
}

TEST_CASE("reconstruct: reference settings stay below 5e-2") {
    const auto [rec, rep] = reconstruct(reference_input(), bump11(), bump11(), presets::axes());
    CHECK(rep.rel_error < 5e-2);
    CHECK(rep.lhs.real() == doctest::Approx(std::sqrt(norm2_R2(reference_input()))));
    CHECK(rec.same_geometry(reference_input()));
}

TEST_CASE("reconstruct: the error grows when the angle count is halved") {
    const double e96 = reference_reconstruction_error(96);
    const double e48 = reference_reconstruction_error(48);
    const double e24 = reference_reconstruction_error(24);
    CHECK(e48 > 2 * e96);
    CHECK(e24 > e48);
}

TEST_CASE("reconstruct: halving the angles roughly doubles the error" * doctest::may_fail()) {
    const double r = reference_reconstruction_error(32) / reference_reconstruction_error(64);
    CHECK(r > 1.5);
    CHECK(r < 3.0);
}

TEST_CASE("parseval: zero input gives zero on both sides") {
    const auto z = presets::geometry().zeros_like();
    const auto r = parseval_check(z, z, bump11(), bump11(), presets::axes(16, 6));
    CHECK(r.lhs == cplx{});
    CHECK(r.rhs == cplx{});
    CHECK(r.rel_error == 0);
}

TEST_CASE("parseval: reference settings stay below 2e-2") {
    const auto& f = reference_input();
    const auto r = parseval_check(f, f, bump11(), bump11(), presets::axes());
    CHECK(r.rel_error < 2e-2);
    CHECK(r.lhs.real() == doctest::Approx(norm2_R2(f)));
}

TEST_CASE("parseval: disjoint spectral annuli are orthogonal on both sides") {
    const auto geom = presets::geometry();
    const auto f = annulus_signal(4, 2.0, 1.4, 0.3, 1).sample(geom);
    const auto h = annulus_signal(4, 9.0, 1.4, 0.3, 2).sample(geom);
    const double scale = std::sqrt(norm2_R2(f) * norm2_R2(h));
    const auto r = parseval_check(f, h, bump11(), bump11(), presets::axes(32, 12));
    CHECK(std::abs(r.lhs) < 1e-6 * scale);
    CHECK(std::abs(r.rhs) < 1e-6 * scale);
    CHECK(r.abs_error < 1e-6 * scale);
}

TEST_CASE("parseval: swapping the windows conjugates the right side") {
    const auto& f = reference_input();
    const auto eta = freq_bump_window(1.2, 0.8);
    const auto ax = presets::axes(16, 8);
    const auto a = parseval_check(f, f, bump11(), eta, ax);
    const auto b = parseval_check(f, f, eta, bump11(), ax);
    CHECK(std::abs(a.rhs - std::conj(b.rhs)) < 1e-12 * std::abs(a.rhs));
}

TEST_CASE("transpose: zero volume, random volume, scaling") {
    const auto& f = reference_input();
    const auto ax = make_coefficient_axes(16, {-8, 8, 129}, {0.3, 6, 6});
    const auto z = transpose_check(f, bump11(), CoefficientVolume(ax));
    CHECK(z.lhs == cplx{});
    CHECK(z.rhs == cplx{});

    const auto Phi = testing::random_volume(ax, 4);
    const auto r = transpose_check(f, bump11(), Phi);
    CHECK(r.rel_error < 1e-3);

    const cplx c(-0.6, 2.5);
    auto cPhi = Phi;
    for (auto& v : cPhi.values) v *= c;
    const auto s = transpose_check(f, bump11(), cPhi);
    CHECK(std::abs(s.lhs - c * r.lhs) < 1e-12 * std::abs(s.lhs));
    CHECK(std::abs(s.rhs - c * r.rhs) < 1e-12 * std::abs(s.rhs));
}

TEST_CASE("isometry: norm ratio is the admissibility constant") {
    const auto& f = reference_input();
    const auto v = dst_fourier(f, bump11(), presets::axes());
    const double C = admissibility_constant(bump11(), bump11(), 2).value.real();
    CHECK(std::abs(norm2_Y(v) / norm2_R2(f) / C - 1) < 2e-2);
}

TEST_CASE("scale multiplier averages to one over a log period") {
    const auto ax = presets::axes(8, presets::scales_per_sign);
    const cplx C = admissibility_constant(bump11(), bump11(), 2).value;
    const int N = 256;
    cplx mean{};
    for (int q = 0; q < N; ++q) mean += scale_multiplier(bump11(), bump11(), ax, C, 2.0 * std::pow(ax.ratio, (q + 0.5) / N));
    mean /= double(N);
    CHECK(std::abs(mean - 1.0) < 1e-6);
    CHECK(scale_multiplier(bump11(), bump11(), ax, C, 0.0) == cplx{});
    // outside every scale's reach
    CHECK(scale_multiplier(bump11(), bump11(), ax, C, 40.0) == cplx{});
}

TEST_CASE("scale truncation error: zero input and reference input") {
    const auto ax = presets::axes();
    CHECK(scale_truncation_error(presets::geometry().zeros_like(), bump11(), bump11(), ax) == 0);
    const double e = scale_truncation_error(reference_input(), bump11(), bump11(), ax);
    CHECK(e > 0);
    CHECK(e < 5e-2);
}
