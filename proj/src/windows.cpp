#include "dirstock/windows.hpp"

#include <algorithm>
#include <cmath>

#include "dirstock/fft.hpp"
#include "dirstock/quadrature.hpp"

namespace dirstock {
namespace {

// Centered DFT helpers on N = grid.count points: index l <-> (l - N/2).
void centered_transform(std::vector<cplx>& v, int sign) {
    const std::size_t n = v.size(), h = n / 2;
    std::rotate(v.begin(), v.begin() + std::ptrdiff_t(h), v.end());
    fft::transform(v, sign);
    std::rotate(v.begin(), v.begin() + std::ptrdiff_t(n - h), v.end());
}

double time_step(SpectralGrid g) { return two_pi / (double(g.count) * g.step); }

} // namespace

Window1D Window1D::from_spectrum(std::string kind, Spectrum fn, double lo, double hi,
                                 SpectralGrid grid) {
    require(grid.count >= 16 && grid.count % 2 == 0 && grid.step > 0,
            "window: spectral grid needs an even count >= 16 and positive step");
    Window1D w;
    w.kind_ = std::move(kind);
    w.fn_ = std::move(fn);
    w.lo_ = lo;
    w.hi_ = hi;
    w.grid_ = grid;
    w.spec_.start = -double(grid.count / 2) * grid.step;
    w.spec_.step = grid.step;
    w.spec_.values.resize(grid.count);
    for (std::size_t l = 0; l < grid.count; ++l)
        w.spec_.values[l] = w.fn_(w.spec_.start + double(l) * grid.step);
    w.build_time_tables();
    w.finish();
    return w;
}

Window1D Window1D::from_tables(std::string kind, SpectralGrid grid, std::vector<cplx> spectral,
                               std::vector<cplx> time) {
    require(grid.count >= 16 && grid.count % 2 == 0 && grid.step > 0,
            "window: spectral grid needs an even count >= 16 and positive step");
    require(spectral.size() == grid.count && time.size() == grid.count,
            "window: table sizes do not match the grid");
    Window1D w;
    w.kind_ = std::move(kind);
    w.grid_ = grid;
    w.spec_.start = -double(grid.count / 2) * grid.step;
    w.spec_.step = grid.step;
    w.spec_.values = std::move(spectral);
    w.build_time_tables();
    w.time_.values = std::move(time);
    // Support is where the table is nonzero.
    const auto& v = w.spec_.values;
    std::size_t first = v.size(), last = 0;
    for (std::size_t l = 0; l < v.size(); ++l)
        if (v[l] != cplx{}) {
            first = std::min(first, l);
            last = l;
        }
    if (first <= last && first < v.size()) {
        w.lo_ = w.spec_.start + double(first == 0 ? 0 : first - 1) * grid.step;
        w.hi_ = w.spec_.start + double(std::min(last + 1, v.size() - 1)) * grid.step;
    }
    w.finish();
    return w;
}

void Window1D::build_time_tables() {
    const std::size_t n = grid_.count;
    const double dx = time_step(grid_);
    const double x0 = -double(n / 2) * dx;
    const double xi0 = spec_.start;

    std::vector<cplx> t(spec_.values), td(n);
    for (std::size_t l = 0; l < n; ++l)
        td[l] = cplx(0, xi0 + double(l) * grid_.step) * spec_.values[l];
    centered_transform(t, +1);
    centered_transform(td, +1);
    const double s = grid_.step / two_pi;
    for (std::size_t m = 0; m < n; ++m) {
        t[m] *= s;
        td[m] *= s;
    }
    time_ = {x0, dx, std::move(t), {}};
    time_d_ = {x0, dx, std::move(td), {}};

    // Second derivative for the Hermite table of psi'.
    std::vector<cplx> tdd(n);
    for (std::size_t l = 0; l < n; ++l) {
        const double xi = xi0 + double(l) * grid_.step;
        tdd[l] = -xi * xi * spec_.values[l];
    }
    centered_transform(tdd, +1);
    for (auto& v : tdd) v *= s;
    time_.derivs = time_d_.values;
    time_d_.derivs = std::move(tdd);

    // d/dxi psi_hat = FT of (-ix) psi(x).
    std::vector<cplx> sd(n);
    for (std::size_t m = 0; m < n; ++m)
        sd[m] = cplx(0, -(x0 + double(m) * dx)) * time_.values[m];
    centered_transform(sd, -1);
    for (auto& v : sd) v *= dx;
    spec_.derivs = std::move(sd);
}

void Window1D::finish() {
    double peak = 0;
    for (const auto& v : time_.values) peak = std::max(peak, std::abs(v));
    radius_ = 0;
    for (std::size_t m = 0; m < time_.values.size(); ++m)
        if (std::abs(time_.values[m]) > 1e-10 * peak)
            radius_ = std::max(radius_, std::abs(time_.start + double(m) * time_.step));
    s1_ = check_s1(*this);
}

cplx Window1D::spectrum(double xi) const {
    if (fn_) return fn_(xi);
    return spec_(xi);
}

Window1D freq_bump_window(double c, double h, SpectralGrid grid) {
    require(h > 0, "freq_bump_window: halfwidth must be positive");
    auto fn = [c, h](double xi) -> cplx {
        const double s = (xi - c) / h;
        if (!(std::abs(s) < 1.0)) return {};
        return {std::exp(-1.0 / (1.0 - s * s)), 0.0};
    };
    Window1D w = Window1D::from_spectrum("bump", fn, c - h, c + h, grid);
    w.center = c;
    w.halfwidth = h;
    return w;
}

Window1D box_window(double lo, double hi, SpectralGrid grid) {
    require(hi > lo, "box_window: empty interval");
    auto fn = [lo, hi](double xi) -> cplx { return (xi >= lo && xi <= hi) ? 1.0 : 0.0; };
    Window1D w = Window1D::from_spectrum("box", fn, lo, hi, grid);
    w.center = 0.5 * (lo + hi);
    w.halfwidth = 0.5 * (hi - lo);
    return w;
}

Window1D gaussian_window(double sigma, SpectralGrid grid) {
    require(sigma > 0, "gaussian_window: sigma must be positive");
    auto fn = [sigma](double xi) -> cplx {
        return std::sqrt(two_pi) * sigma * std::exp(-0.5 * sigma * sigma * xi * xi);
    };
    const double reach = 39.0 / sigma; // exp(-reach^2 sigma^2 / 2) underflows past this
    Window1D w = Window1D::from_spectrum("gaussian", fn, -reach, reach, grid);
    w.sigma = sigma;
    return w;
}

S1Check check_s1(const Window1D& w, double tol, double delta) {
    const auto& t = w.spectral_table();
    const double lo = t.start, hi = t.start + double(t.values.size() - 1) * t.step;
    require(lo <= -1.0 - delta && hi >= -1.0 + delta,
            "check_s1: spectral table does not cover the neighbourhood of -1");
    double peak = 0;
    for (const auto& v : t.values) peak = std::max(peak, std::abs(v));
    double defect = 0;
    const int samples = 4000;
    for (int q = 0; q <= samples; ++q) {
        const double xi = -1.0 - delta + 2.0 * delta * q / samples;
        defect = std::max(defect, std::abs(w.spectrum(xi)));
    }
    for (std::size_t l = 0; l < t.values.size(); ++l) {
        const double xi = t.start + double(l) * t.step;
        if (std::abs(xi + 1.0) <= delta) defect = std::max(defect, std::abs(t.values[l]));
    }
    // The zero window is trivially flat at -1 but useless.
    return {peak > 0 && defect <= tol * peak, defect};
}

std::vector<cplx> moments(const Window1D& w, int k_max) {
    const auto& t = w.time_table();
    const std::size_t n = t.values.size();
    std::vector<cplx> m(std::size_t(std::max(k_max, -1) + 1), cplx{});
    for (std::size_t q = 0; q < n; ++q) {
        const double x = t.start + double(q) * t.step;
        const double wt = (q == 0 || q + 1 == n) ? 0.5 * t.step : t.step;
        cplx term = std::polar(1.0, x) * t.values[q] * wt;
        for (auto& mk : m) {
            mk += term;
            term *= x;
        }
    }
    return m;
}

AdmissibilityResult admissibility_constant(const Window1D& psi, const Window1D& eta, int n) {
    require(n >= 1, "admissibility_constant: dimension must be positive");
    AdmissibilityResult res;
    res.n = n;
    if (!psi.s1_flag()) res.warnings.push_back("analysis window is not S1-admissible");
    if (!eta.s1_flag()) res.warnings.push_back("reconstruction window is not S1-admissible");

    auto integrand = [&](double xi) -> cplx {
        return std::conj(psi.spectrum(xi - 1.0)) * eta.spectrum(xi - 1.0) /
               std::pow(std::abs(xi), n);
    };
    const double lo = std::max(psi.support_lo(), eta.support_lo()) + 1.0;
    const double hi = std::min(psi.support_hi(), eta.support_hi()) + 1.0;
    const double e0 = admissibility_eps0;
    cplx total{};
    double err = 0;
    auto piece = [&](double a, double b) {
        if (!(b > a)) return;
        // Tolerance relative to a coarse magnitude, so non-S1 windows with huge
        // integrands near the excluded point do not run every panel to full depth.
        double mag = 0;
        for (int q = 0; q <= 64; ++q) mag = std::max(mag, std::abs(integrand(a + (b - a) * q / 64.0)));
        auto q = adaptive_simpson(integrand, a, b, 1e-14 * std::max(1.0, b - a) * std::max(1.0, mag));
        total += q.value;
        err += q.error;
    };
    if (hi > lo) {
        piece(lo, std::min(hi, -e0));
        piece(std::max(lo, e0), hi);
        // Excluded neighbourhood of 0: zero for S1 windows. Otherwise bound it by the
        // largest product there over the exclusion scale.
        double excluded = 0;
        for (int q = -50; q <= 50; ++q) {
            const double xi = e0 * q / 50.0;
            excluded = std::max(excluded, std::abs(psi.spectrum(xi - 1.0)) *
                                              std::abs(eta.spectrum(xi - 1.0)));
        }
        if (excluded > 0) {
            err += 2.0 * e0 * excluded * std::pow(e0, -n);
            res.warnings.push_back("integrand does not vanish near xi = 0");
        }
    }
    res.value = total / pi;
    res.abs_error_estimate = err / pi;
    if (!(std::abs(res.value) >= 1e-12))
        throw NotReconstructionPair("admissibility constant vanishes: |C| < 1e-12");
    return res;
}

Window1D derivative_window(const Window1D& psi, int k) {
    require(k >= 0, "derivative_window: order must be nonnegative");
    if (k == 0) return psi;
    const cplx ik_unit = std::pow(cplx(0, 1), k);
    Window1D w;
    if (psi.analytic()) {
        auto base = psi.fn_;
        auto fn = [base, k, ik_unit](double xi) -> cplx {
            return ik_unit * std::pow(xi, k) * base(xi);
        };
        w = Window1D::from_spectrum(psi.kind(), fn, psi.support_lo(), psi.support_hi(),
                                    psi.grid());
    } else {
        const auto& t = psi.spectral_table();
        std::vector<cplx> spec(t.values.size());
        for (std::size_t l = 0; l < spec.size(); ++l)
            spec[l] = ik_unit * std::pow(t.start + double(l) * t.step, k) * t.values[l];
        w = Window1D::from_tables(psi.kind(), psi.grid(), spec,
                                  std::vector<cplx>(spec.size()));
        // Keep the time table consistent with the new spectrum.
        w.build_time_tables();
        w.finish();
    }
    w.order_ = psi.order_ + k;
    w.center = psi.center;
    w.halfwidth = psi.halfwidth;
    w.sigma = psi.sigma;
    return w;
}

} // namespace dirstock
