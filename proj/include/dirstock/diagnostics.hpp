#pragma once

#include <string>
#include <vector>

#include "dirstock/grids.hpp"

namespace dirstock {

// Finite-grid lower bound of a supremum, with the relative change seen when the
// finite-difference spacing is doubled.
struct SeminormEstimate {
    std::string indices;
    double value = 0;
    double refinement_delta = 0;
    std::string grid;
};

// sup (1+|x|)^m max_{|alpha|<=m} |d^alpha phi|, m <= 4.
SeminormEstimate seminorm_rho_m(const SignalGrid2D& phi, int m);

// sup (1+b^2)^{r/2} (|a|^s + |a|^{-s}) |d_a^l d_b^m (d_theta^2)^k Phi|, l,m <= 2, k <= 1.
SeminormEstimate seminorm_Y(const CoefficientVolume& Phi, int s, int r, int l, int m, int k);

// Same, restricted to offsets in [b_lo, b_hi] and |a| in [a_lo, a_hi].
double seminorm_Y_window(const CoefficientVolume& Phi, int s, int r, int l, int m, int k,
                         double b_lo, double b_hi, double a_lo, double a_hi);

struct PolarGrid {
    std::size_t angles = 64;
    double w_max = 8.0;
    std::size_t w_count = 257; // w_j = j * w_max / (w_count - 1)
};

// sup |w^N d_w^q (d_theta^2)^k phi_hat(w u)|, q <= 2, k <= 1, on a polar grid.
SeminormEstimate seminorm_dot(const SignalGrid2D& phi, int N, int q, int k, PolarGrid polar = {});

struct DecayReport {
    struct Entry {
        int s = 0, r = 0;
        double full = 0;   // sup over the whole volume
        double inner = 0;  // sup over the half-size domain
        double growth = 1; // full / inner
    };
    std::vector<Entry> entries;
    double inner_b_lo = 0, inner_b_hi = 0, inner_a_lo = 0, inner_a_hi = 0;

    const Entry& at(int s, int r) const;
    // Entries whose growth exceeds the limit.
    std::vector<Entry> flagged(double limit = 1.05) const;
};

// Seminorms at (s, r) in {0,1,2}^2 over the full volume and over the domain with
// half the offset range and scales in [rho a_min, a_max / rho], rho = min(2, (a_max/a_min)^{1/4}).
DecayReport decay_report(const CoefficientVolume& Phi);

} // namespace dirstock
