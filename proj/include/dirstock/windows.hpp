#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dirstock/common.hpp"
#include "dirstock/interp.hpp"

namespace dirstock {

// Spectral samples xi_l = (l - count/2) * step. The time table lives on the
// FFT-conjugate grid x_m = (m - count/2) * 2 pi / (count * step).
struct SpectralGrid {
    double step = 0.005;
    std::size_t count = std::size_t{1} << 17;
};

struct S1Check {
    bool flag = false;
    double defect = 0.0;
};

inline constexpr double default_s1_tol = 1e-10;
inline constexpr double default_s1_delta = 0.1;

class Window1D {
public:
    using Spectrum = std::function<cplx(double)>;

    // Window defined by an analytic spectrum that vanishes outside [lo, hi].
    static Window1D from_spectrum(std::string kind, Spectrum fn, double lo, double hi,
                                  SpectralGrid grid = {});

    // Window known only through its tables (e.g. read from a file). Spectral
    // derivatives for interpolation are recomputed from the time table.
    static Window1D from_tables(std::string kind, SpectralGrid grid,
                                std::vector<cplx> spectral, std::vector<cplx> time);

    cplx operator()(double x) const { return time_(x); }
    cplx derivative(double x) const { return time_d_(x); }
    cplx spectrum(double xi) const;

    double support_lo() const { return lo_; }
    double support_hi() const { return hi_; }
    // |psi(x)| < 1e-10 max|psi| for |x| > radius().
    double radius() const { return radius_; }

    const HermiteTable& time_table() const { return time_; }
    const HermiteTable& spectral_table() const { return spec_; }
    SpectralGrid grid() const { return grid_; }

    bool s1_flag() const { return s1_.flag; }
    double s1_defect() const { return s1_.defect; }
    bool analytic() const { return static_cast<bool>(fn_); }

    const std::string& kind() const { return kind_; }
    int derivative_order() const { return order_; }

    // Free-form parameters carried into window files.
    double center = 0.0;
    double halfwidth = 0.0;
    double sigma = 0.0;

private:
    friend Window1D derivative_window(const Window1D&, int);
    void build_time_tables();
    void finish();

    std::string kind_;
    int order_ = 0;
    Spectrum fn_;
    double lo_ = 0, hi_ = 0;
    SpectralGrid grid_;
    HermiteTable spec_;
    HermiteTable time_;
    HermiteTable time_d_;
    double radius_ = 0;
    S1Check s1_;
};

// psi_hat(xi) = exp(-1/(1 - ((xi-c)/h)^2)) on |xi - c| < h.
Window1D freq_bump_window(double c, double h, SpectralGrid grid = {});
// Indicator of [lo, hi] in frequency.
Window1D box_window(double lo, double hi, SpectralGrid grid = {});
// psi(x) = exp(-x^2 / (2 sigma^2)). Not S1: its spectrum is positive at -1.
Window1D gaussian_window(double sigma = 1.0, SpectralGrid grid = {});

S1Check check_s1(const Window1D& w, double tol = default_s1_tol,
                 double delta = default_s1_delta);

// m_k = int x^k e^{ix} psi(x) dx by the trapezoid rule on the time table.
std::vector<cplx> moments(const Window1D& w, int k_max);

struct AdmissibilityResult {
    cplx value;
    double abs_error_estimate = 0.0;
    int n = 2;
    std::vector<std::string> warnings;
};

inline constexpr double admissibility_eps0 = 1e-6;

// C = (1/pi) int conj(psi_hat(xi-1)) eta_hat(xi-1) |xi|^{-n} dxi.
AdmissibilityResult admissibility_constant(const Window1D& psi, const Window1D& eta,
                                           int n = 2);

// Spectrum multiplied by (i xi)^k, i.e. the k-th derivative in time.
Window1D derivative_window(const Window1D& psi, int k);

} // namespace dirstock
