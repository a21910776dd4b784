// Acceptance suite. One line per criterion, exit status 1 if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dirstock/diagnostics.hpp"
#include "dirstock/dst.hpp"
#include "dirstock/presets.hpp"
#include "dirstock/radon.hpp"
#include "dirstock/reference.hpp"
#include "dirstock/signals.hpp"
#include "dirstock/synthesis.hpp"

using namespace dirstock;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

CoefficientVolume random_volume(const CoefficientAxes& ax, std::uint64_t seed) {
    CoefficientVolume v(ax);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    for (auto& c : v.values) c = {nd(rng), nd(rng)};
    return v;
}

// Relative RMS between two volumes restricted to the probe cells.
double probe_rms(const CoefficientVolume& a, const CoefficientVolume& b, const std::vector<ProbeCell>& cells) {
    std::vector<cplx> x, y;
    for (const auto& c : cells) {
        x.push_back(a.at(c.i, c.j, c.k));
        y.push_back(b.at(c.i, c.j, c.k));
    }
    return relative_rms(x, y);
}

Outcome route_equivalence() {
    // Direct sums are evaluated on probe cells only; a full direct volume at this size
    // would take hours.
    double worst[2] = {0, 0};
    std::string detail;
    for (int level = 0; level < 2; ++level) {
        const auto f = presets::signal().sample(presets::geometry(level));
        const auto psi = presets::window();
        const auto ax = presets::axes(32, 16, level);
        const auto vf = dst_fourier(f, psi, ax);
        const auto vr = dst_radon(f, psi, ax);
        const auto cells = probe_cells(ax, 256, 2024);
        CoefficientVolume vd(ax);
        for (const auto& c : cells) vd.at(c.i, c.j, c.k) = dst_direct(f, psi, ax.angles[c.i], ax.offsets[c.j], ax.scales[c.k]);
        const double fr = relative_rms(vr.values, vf.values);
        const double fd = probe_rms(vf, vd, cells);
        const double rd = probe_rms(vr, vd, cells);
        worst[level] = std::max({fr, fd, rd});
        detail += fmt("%s%dx%d: fourier/radon %.2e fourier/direct %.2e radon/direct %.2e", level ? "; " : "",
                      int(f.nx), int(f.ny), fr, fd, rd);
    }
    return {worst[0] < 1e-3 && worst[1] < 1e-4, detail + " (limits 1e-3, 1e-4 refined)"};
}

Outcome parseval() {
    const auto f = presets::signal().sample(presets::geometry());
    const auto psi = presets::window();
    const double e0 = parseval_check(f, f, psi, psi, presets::axes(64, 24)).rel_error;
    const double e1 = parseval_check(f, f, psi, psi, presets::axes(128, 48)).rel_error;
    return {e0 < 2e-2 && e1 <= 0.5 * e0,
            fmt("rel error %.2e at 64x24, %.2e at 128x48 (limit 2e-2, then at most half)", e0, e1)};
}

Outcome reconstruction() {
    const auto f = presets::signal().sample(presets::geometry());
    const auto psi = presets::window();
    double e[3];
    for (int q = 0; q < 3; ++q) {
        const std::size_t m = std::size_t(1) << q;
        e[q] = reconstruct(f, psi, psi, presets::axes(64 * m, 24 * m)).second.rel_error;
    }
    return {e[0] < 5e-2 && e[1] < e[0] && e[2] < e[1],
            fmt("rel L2 error %.2e, %.2e, %.2e at 64x24, 128x48, 256x96 (limit 5e-2, decreasing)", e[0], e[1], e[2])};
}

Outcome transpose() {
    const auto psi = presets::window();
    const auto geom = presets::geometry();
    const auto ax = presets::axes(32, 16);
    double worst = 0;
    for (std::uint64_t s = 1; s <= 10; ++s) {
        const auto f = presets::signal(100 + s).sample(geom);
        const auto r = transpose_check(f, psi, random_volume(ax, 200 + s));
        worst = std::max(worst, r.rel_error);
    }
    return {worst < 1e-3, fmt("worst rel error %.2e over 10 pairs (limit 1e-3)", worst)};
}

Outcome admissibility() {
    const auto box = box_window(1, 2);
    const double c_box = admissibility_constant(box, box, 2).value.real();
    const double box_err = std::abs(c_box - 1 / (6 * pi));

    // Phased bumps: spectra bump(c, h)(xi) e^{i(alpha xi + beta)} with support above -0.9.
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(0, 1);
    auto random_window = [&] {
        const double h = 0.3 + 0.7 * U(rng), c = -0.9 + h + 0.1 + 1.5 * U(rng);
        const double alpha = 4 * U(rng) - 2, beta = two_pi * U(rng);
        const auto bump = freq_bump_window(c, h);
        return Window1D::from_spectrum(
            "phased_bump", [bump, alpha, beta](double xi) { return bump.spectrum(xi) * std::polar(1.0, alpha * xi + beta); },
            c - h, c + h);
    };
    double sym = 0;
    for (int q = 0; q < 5; ++q) {
        const auto psi = random_window(), eta = random_window();
        const cplx a = admissibility_constant(psi, eta, 2).value, b = admissibility_constant(eta, psi, 2).value;
        sym = std::max(sym, std::abs(a - std::conj(b)));
    }
    const bool gauss_rejected = !gaussian_window().s1_flag();
    return {box_err < 1e-8 && sym < 1e-12 && gauss_rejected,
            fmt("box |C - 1/(6 pi)| %.2e (limit 1e-8), conjugate symmetry %.2e over 5 pairs (limit 1e-12), "
                "Gaussian %s",
                box_err, sym, gauss_rejected ? "rejected" : "accepted")};
}

Outcome fourier_slice_theorem() {
    const auto f = presets::signal().sample(presets::geometry());
    const double h = f.dx;
    // Axis angles with the p grid on the sample lattice, so the line sums of the
    // projection and the 2-D sum run over the same samples.
    const std::size_t np = 2 * std::max(f.nx, f.ny) + 1;
    const UniformGrid1D p{-double(np / 2) * h, h, np};
    const UniformGrid1D xi{-0.9 * pi / h, 1.8 * pi / h / 255.0, 256};
    double exact = 0;
    for (int q = 0; q < 4; ++q) {
        const double th = q * pi / 2;
        const auto s1 = projection_spectrum(radon_direct(f, th, p), xi);
        const auto s2 = fourier_slice(f, th, xi, SliceMode::Direct);
        exact = std::max(exact, relative_rms(s1.values, s2.values));
    }
    double fast = 0;
    for (double th : {0.3, 1.1, 2.45, 3.9, 5.6}) {
        const auto a = fourier_slice(f, th, xi, SliceMode::Fast);
        const auto b = fourier_slice(f, th, xi, SliceMode::Direct);
        fast = std::max(fast, relative_rms(a.values, b.values));
    }
    return {exact < 1e-8 && fast < 1e-3,
            fmt("projection spectrum vs direct slice %.2e (limit 1e-8), fast vs direct %.2e (limit 1e-3)", exact, fast)};
}

Outcome distribution() {
    const auto f = presets::signal().sample(presets::geometry());
    const auto psi = presets::window();
    const auto ax = presets::axes(32, 16);
    DistributionRep e1;
    e1.terms.push_back({{1, 0}, f});
    const double first = relative_rms(dst_distribution(e1, psi, ax).values,
                                      dst_fourier(spectral_derivative(f, 1, 0), psi, ax).values);
    DistributionRep mixed;
    mixed.terms.push_back({{1, 1}, f});
    const double second = relative_rms(dst_distribution(mixed, psi, ax).values,
                                       dst_fourier(spectral_derivative(f, 1, 1), psi, ax).values);
    return {first < 1e-3 && second < 3e-3,
            fmt("first order %.2e (limit 1e-3), mixed second order %.2e (limit 3e-3)", first, second)};
}

Outcome isometry() {
    const auto geom = presets::geometry();
    const auto ax = presets::axes();
    const Window1D windows[3] = {freq_bump_window(1, 1), freq_bump_window(1.2, 0.8), freq_bump_window(0.8, 0.7)};
    const std::vector<const Window1D*> ws{&windows[0], &windows[1], &windows[2]};
    double C[3];
    for (int w = 0; w < 3; ++w) C[w] = admissibility_constant(windows[w], windows[w], 2).value.real();
    double worst = 0;
    for (std::uint64_t seed : {7, 11, 23}) {
        const auto f = presets::signal(seed).sample(geom);
        const double nf = norm2_R2(f);
        const auto vs = dst_fourier_multi(f, ws, ax);
        for (int w = 0; w < 3; ++w) worst = std::max(worst, std::abs(norm2_Y(vs[w]) / nf / C[w] - 1));
    }
    return {worst < 2e-2, fmt("worst |ratio / C - 1| %.2e over 3 windows x 3 inputs (limit 2e-2)", worst)};
}

Outcome decay() {
    const auto geom = presets::geometry();
    const auto psi = presets::window();
    const auto ax = presets::axes();
    double growth = 0;
    bool clean = true;
    for (std::uint64_t seed : {7, 11}) {
        const auto r = decay_report(dst_fourier(presets::signal(seed).sample(geom), psi, ax));
        for (const auto& e : r.entries) growth = std::max(growth, e.growth);
        clean = clean && r.flagged().empty();
    }
    const auto g = decay_report(dst_fourier(gaussian_grid(geom), psi, ax));
    double g_growth = 0;
    for (const auto& e : g.entries) g_growth = std::max(g_growth, e.growth);
    const bool flagged = !g.flagged().empty();
    return {growth < 1.05 && clean && flagged,
            fmt("worst growth %.4f on S0 inputs (limit 1.05), Gaussian growth %.2f %s", growth, g_growth,
                flagged ? "flagged" : "not flagged")};
}

Outcome brute_force() {
    const auto ax = make_coefficient_axes(8, {-3, 3, 16}, {0.4, 5, 3});
    const auto geom = make_grid(48, 0.2);
    const auto psi = presets::window();
    double syn = 0, ip = 0;
    for (std::uint64_t s = 1; s <= 3; ++s) {
        const auto F = random_volume(ax, s), G = random_volume(ax, 50 + s);
        syn = std::max(syn, relative_rms(synthesize(F, psi, geom).values, reference::synthesize(F, psi, geom).values));
        const cplx a = inner_product_Y(F, G), b = reference::inner_product_Y(F, G);
        ip = std::max(ip, std::abs(a - b) / std::abs(b));
    }
    return {syn < 1e-8 && ip < 1e-8,
            fmt("synthesize %.2e, inner_product_Y %.2e on 8x16x6 volumes (limit 1e-8)", syn, ip)};
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {"route equivalence", route_equivalence},
        {"extended Parseval identity", parseval},
        {"reconstruction", reconstruction},
        {"transpose identity", transpose},
        {"admissibility constant", admissibility},
        {"Fourier slice theorem", fourier_slice_theorem},
        {"distributional formula", distribution},
        {"isometry constant", isometry},
        {"decay diagnostics", decay},
        {"brute-force oracles", brute_force},
    };
    int failed = 0, n = 0;
    for (const auto& c : criteria) {
        ++n;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("AC%-2d %s  %s: %s [%.1f s]\n", n, o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), sec);
        std::fflush(stdout);
        failed += !o.pass;
    }
    std::printf("%d of %d criteria passed\n", n - failed, n);
    return failed ? 1 : 0;
}
