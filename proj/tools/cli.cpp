#include "cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <iostream>
#include <random>

#include "dirstock/diagnostics.hpp"
#include "dirstock/dst.hpp"
#include "dirstock/io.hpp"
#include "dirstock/presets.hpp"
#include "dirstock/radon.hpp"
#include "dirstock/signals.hpp"
#include "dirstock/synthesis.hpp"

namespace dirstock::cli {
namespace {

using nlohmann::json;

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json report_json(const VerificationReport& r, double tol) {
    return {{"lhs", to_json(r.lhs)},           {"rhs", to_json(r.rhs)},
            {"abs_error", r.abs_error},       {"rel_error", r.rel_error},
            {"tolerance", tol},               {"pass", r.rel_error <= tol},
            {"summary", r.summary}};
}

struct AxesArgs {
    std::size_t angles = presets::angles;
    double bmin = -presets::b_reach, bmax = presets::b_reach;
    std::size_t bcount = 0; // 0: on the grid lattice
    double amin = presets::a_min, amax = presets::a_max;
    std::size_t acount = presets::scales_per_sign;

    void add(CLI::App* c) {
        c->add_option("--angles", angles, "number of uniform angles");
        c->add_option("--bmin", bmin, "smallest offset");
        c->add_option("--bmax", bmax, "largest offset");
        c->add_option("--bcount", bcount, "number of offsets (default: spacing dx)");
        c->add_option("--amin", amin, "smallest |a|");
        c->add_option("--amax", amax, "largest |a|");
        c->add_option("--acount", acount, "scales per sign");
    }
    CoefficientAxes build(const SignalGrid2D& f) const {
        std::size_t nb = bcount;
        if (nb == 0) nb = std::size_t(std::llround((bmax - bmin) / f.dx)) + 1;
        return make_coefficient_axes(angles, {bmin, bmax, nb}, {amin, amax, acount});
    }
};

struct Common {
    std::string input, window, output, report;
    AxesArgs axes;
    double tol = -1;
    std::uint64_t seed = 1;
};

SignalGrid2D load_signal(const std::string& path) {
    if (path.empty()) return presets::signal().sample(presets::geometry());
    return io::read_grid(path);
}

Window1D load_window(const std::string& path) {
    return path.empty() ? presets::window() : io::read_window(path);
}

int finish(const json& j, const std::string& path, bool pass) {
    std::cout << j.dump(2) << '\n';
    if (!path.empty()) io::write_json(path, j);
    return pass ? exit_pass : exit_verification_failure;
}

int cmd_window(double center, double halfwidth, const std::string& output, bool emit, int dim,
               int kmax) {
    Window1D w = freq_bump_window(center, halfwidth);
    json rep = {{"kind", "bump"},          {"center", center},
                {"halfwidth", halfwidth},  {"s1", w.s1_flag()},
                {"s1_defect", w.s1_defect()}};
    if (!w.s1_flag()) {
        std::cerr << "window is not S1-admissible (|psi_hat| near -1 is " << w.s1_defect() << ")\n";
        return exit_invalid_input;
    }
    json m = json::array();
    for (const auto& z : moments(w, kmax)) m.push_back(std::abs(z));
    rep["moment_abs"] = m;
    if (emit) {
        const auto C = admissibility_constant(w, w, dim);
        rep["constant"] = to_json(C.value);
        rep["constant_error"] = C.abs_error_estimate;
        rep["warnings"] = C.warnings;
        std::cout.precision(17);
        std::cout << C.value.real() << ' ' << C.value.imag() << '\n';
    }
    if (!output.empty()) {
        io::write_window(output, w);
        io::write_json(output + ".json", rep);
    }
    return exit_pass;
}

int cmd_signal(const std::string& output, const std::string& kind, int level, std::uint64_t seed) {
    require(!output.empty(), "signal: --output is required");
    const SignalGrid2D g = presets::geometry(level);
    if (kind == "reference") io::write_grid(output, presets::signal(seed).sample(g));
    else if (kind == "gaussian") io::write_grid(output, gaussian_grid(g));
    else if (kind == "zero") io::write_grid(output, g.zeros_like());
    else throw InvalidArgument("signal: kind must be reference, gaussian or zero");
    return exit_pass;
}

int cmd_analyze(const Common& o, const std::string& route, std::size_t probe) {
    require(!o.output.empty(), "analyze: --output is required");
    const SignalGrid2D f = load_signal(o.input);
    const Window1D psi = load_window(o.window);
    const CoefficientAxes ax = o.axes.build(f);
    std::vector<std::string> warnings;
    DstOptions opt;
    opt.warnings = &warnings;
    CoefficientVolume vol;
    if (route == "fourier") {
        vol = dst_fourier(f, psi, ax, opt);
    } else if (route == "radon") {
        vol = dst_radon(f, psi, ax, opt);
    } else if (route == "direct") {
        check_axes_compatible(f, psi, ax);
        vol = CoefficientVolume(ax);
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < ax.n_angles(); ++i)
            for (std::size_t j = 0; j < ax.n_offsets(); ++j)
                for (std::size_t k = 0; k < ax.n_scales(); ++k)
                    vol.at(i, j, k) = dst_direct(f, psi, ax.angles[i], ax.offsets[j], ax.scales[k]);
    } else {
        throw InvalidArgument("analyze: route must be direct, fourier or radon");
    }
    json extra = {{"route", route}, {"window", psi.kind()}, {"warnings", warnings}};
    if (probe > 0) {
        // Largest cell error relative to the largest oracle magnitude among the probes.
        const auto cells = probe_cells(ax, probe, o.seed);
        double err = 0, big = 0;
        for (const auto& c : cells) {
            const cplx want = dst_direct(f, psi, ax.angles[c.i], ax.offsets[c.j], ax.scales[c.k]);
            err = std::max(err, std::abs(vol.at(c.i, c.j, c.k) - want));
            big = std::max(big, std::abs(want));
        }
        extra["probe_count"] = probe;
        extra["probe_max_rel_error"] = big > 0 ? err / big : err;
    }
    io::write_coefficients(o.output, vol, extra);
    return exit_pass;
}

int cmd_synthesize(const Common& o, const std::string& like, bool normalize) {
    require(!o.input.empty() && !o.output.empty(), "synthesize: --input and --output are required");
    const CoefficientVolume vol = io::read_coefficients(o.input);
    const Window1D eta = load_window(o.window);
    const SignalGrid2D geom = like.empty() ? presets::geometry() : io::read_grid(like).zeros_like();
    SignalGrid2D out = synthesize(vol, eta, geom);
    if (normalize) {
        const cplx C = admissibility_constant(eta, eta, vol.axes.n).value;
        for (auto& v : out.values) v /= C;
    }
    io::write_grid(o.output, out);
    return exit_pass;
}

int cmd_verify(const std::string& what, const Common& o) {
    const SignalGrid2D f = load_signal(o.input);
    const Window1D psi = load_window(o.window);
    const CoefficientAxes ax = o.axes.build(f);
    json j = {{"check", what}};
    bool pass = false;
    if (what == "parseval") {
        const double tol = o.tol >= 0 ? o.tol : 2e-2;
        const auto r = parseval_check(f, f, psi, psi, ax);
        j.update(report_json(r, tol));
        pass = r.rel_error <= tol;
    } else if (what == "reconstruction") {
        const double tol = o.tol >= 0 ? o.tol : 5e-2;
        const auto r = reconstruct(f, psi, psi, ax).second;
        j.update(report_json(r, tol));
        j["scale_truncation_error"] = scale_truncation_error(f, psi, psi, ax);
        pass = r.rel_error <= tol;
    } else if (what == "transpose") {
        const double tol = o.tol >= 0 ? o.tol : 1e-3;
        CoefficientVolume Phi(ax);
        std::mt19937_64 rng(o.seed);
        std::normal_distribution<double> nd;
        for (auto& v : Phi.values) v = {nd(rng), nd(rng)};
        const auto r = transpose_check(f, psi, Phi);
        j.update(report_json(r, tol));
        pass = r.rel_error <= tol;
    } else if (what == "routes") {
        const double tol = o.tol >= 0 ? o.tol : 1e-3;
        const auto vf = dst_fourier(f, psi, ax), vr = dst_radon(f, psi, ax);
        const double e = relative_rms(vr.values, vf.values);
        const auto cells = probe_cells(ax, 64, o.seed);
        const double p = probe_error(vf, f, psi, cells);
        j.update({{"radon_vs_fourier", e}, {"fourier_vs_direct_probe", p}, {"tolerance", tol}});
        pass = std::max(e, p) <= tol;
        j["pass"] = pass;
    } else if (what == "slice") {
        const double tol = o.tol >= 0 ? o.tol : 1e-8;
        // Axis-aligned angles with the p grid on the sample lattice, where the
        // trapezoid line sums reduce to row and column sums.
        const double h = f.dx;
        const std::size_t np = 2 * std::max(f.nx, f.ny) + 1;
        const UniformGrid1D p{-double(np / 2) * h, h, np};
        const UniformGrid1D xi{-0.9 * pi / h, 1.8 * pi / h / 255.0, 256};
        double worst = 0;
        for (int q = 0; q < 4; ++q) {
            const double th = q * pi / 2;
            const auto s1 = projection_spectrum(radon_direct(f, th, p), xi);
            const auto s2 = fourier_slice(f, th, xi, SliceMode::Direct);
            worst = std::max(worst, relative_rms(s1.values, s2.values));
        }
        j.update({{"rel_rms", worst}, {"tolerance", tol}});
        pass = worst <= tol;
        j["pass"] = pass;
    } else {
        throw InvalidArgument("verify: unknown check " + what);
    }
    return finish(j, o.report, pass);
}

int cmd_export_slice(const std::string& input, const std::string& output, long angle, long scale) {
    require(!input.empty() && !output.empty(), "export-slice: --input and --output are required");
    require((angle >= 0) != (scale >= 0), "export-slice: give exactly one of --angle-index, --scale-index");
    const CoefficientVolume v = io::read_coefficients(input);
    const auto& ax = v.axes;
    // Rows are offsets. Columns are scales at a fixed angle, or angles at a fixed scale.
    const std::size_t rows = ax.n_offsets(), cols = angle >= 0 ? ax.n_scales() : ax.n_angles();
    require(angle < long(ax.n_angles()) && scale < long(ax.n_scales()), "export-slice: index out of range");
    std::vector<double> mag(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            mag[r * cols + c] = std::abs(angle >= 0 ? v.at(std::size_t(angle), r, c) : v.at(c, r, std::size_t(scale)));
    const double mx = *std::max_element(mag.begin(), mag.end());
    std::vector<unsigned char> px(mag.size(), 0);
    if (mx > 0)
        for (std::size_t q = 0; q < mag.size(); ++q) px[q] = (unsigned char)std::lround(255.0 * mag[q] / mx);
    io::write_pgm(output, cols, rows, px);
    io::write_json(output + ".json", {{"max", mx}, {"width", cols}, {"height", rows},
                                      {"fixed", angle >= 0 ? "angle" : "scale"},
                                      {"index", angle >= 0 ? angle : scale}});
    return exit_pass;
}

} // namespace

int run(int argc, char** argv) {
    CLI::App app{"Directional Stockwell transform toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (0: OpenMP default)");

    double center = 1, halfwidth = 1;
    bool emit = false;
    int dim = 2, kmax = 6;
    std::string out_path;
    auto* w = app.add_subcommand("window", "build a bump window and check it");
    w->add_option("--center", center);
    w->add_option("--halfwidth", halfwidth);
    w->add_option("--output", out_path);
    w->add_flag("--emit-constant", emit, "print C_{psi,psi}");
    w->add_option("--dim", dim);
    w->add_option("--moments", kmax);

    std::string kind = "reference";
    int level = 0;
    std::uint64_t sig_seed = presets::atom_seed;
    auto* sg = app.add_subcommand("signal", "write a test signal grid");
    sg->add_option("--output", out_path);
    sg->add_option("--kind", kind, "reference | gaussian | zero");
    sg->add_option("--level", level, "grid refinement level");
    sg->add_option("--seed", sig_seed);

    Common o;
    std::string route = "fourier";
    std::size_t probe = 0;
    auto* an = app.add_subcommand("analyze", "forward transform of a grid file");
    an->add_option("--input", o.input);
    an->add_option("--window", o.window);
    an->add_option("--output", o.output);
    an->add_option("--route", route, "direct | fourier | radon");
    an->add_option("--probe", probe, "cells checked against the direct sum");
    an->add_option("--seed", o.seed);
    o.axes.add(an);

    std::string like;
    bool normalize = false;
    auto* sy = app.add_subcommand("synthesize", "adjoint transform of a coefficient file");
    sy->add_option("--input", o.input);
    sy->add_option("--window", o.window);
    sy->add_option("--output", o.output);
    sy->add_option("--like", like, "grid file giving the output geometry");
    sy->add_flag("--normalize", normalize, "divide by C_{eta,eta}");

    std::string what;
    auto* ve = app.add_subcommand("verify", "run a verification harness");
    ve->add_option("check", what, "parseval | reconstruction | transpose | routes | slice")->required();
    ve->add_option("--input", o.input);
    ve->add_option("--window", o.window);
    ve->add_option("--tol", o.tol);
    ve->add_option("--output", o.report, "JSON report path");
    ve->add_option("--seed", o.seed);
    o.axes.add(ve);

    long angle_index = -1, scale_index = -1;
    auto* ex = app.add_subcommand("export-slice", "write |coefficients| on one slice as PGM");
    ex->add_option("--input", o.input);
    ex->add_option("--output", o.output);
    ex->add_option("--angle-index", angle_index);
    ex->add_option("--scale-index", scale_index);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_invalid_input;
    }
    if (threads > 0) omp_set_num_threads(threads);
    try {
        if (*w) return cmd_window(center, halfwidth, out_path, emit, dim, kmax);
        if (*sg) return cmd_signal(out_path, kind, level, sig_seed);
        if (*an) return cmd_analyze(o, route, probe);
        if (*sy) return cmd_synthesize(o, like, normalize);
        if (*ve) return cmd_verify(what, o);
        if (*ex) return cmd_export_slice(o.input, o.output, angle_index, scale_index);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid_input;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid_input;
    }
    return exit_invalid_input;
}

int run(const std::vector<std::string>& args) {
    std::vector<std::string> all{"dirstock"};
    all.insert(all.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : all) argv.push_back(s.data());
    return run(int(argv.size()), argv.data());
}

} // namespace dirstock::cli
