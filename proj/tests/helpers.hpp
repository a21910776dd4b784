#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "dirstock/grids.hpp"

namespace testing {

using dirstock::cplx;

inline std::vector<cplx> random_values(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    std::vector<cplx> v(n);
    for (auto& z : v) z = {nd(rng), nd(rng)};
    return v;
}

inline dirstock::CoefficientVolume random_volume(const dirstock::CoefficientAxes& ax,
                                                 std::uint64_t seed) {
    dirstock::CoefficientVolume v(ax);
    v.values = random_values(ax.size(), seed);
    return v;
}

inline double max_abs(const std::vector<cplx>& v) {
    double m = 0;
    for (const auto& z : v) m = std::max(m, std::abs(z));
    return m;
}

// max |a - b| / max |b|
inline double max_rel(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double e = 0;
    for (std::size_t q = 0; q < a.size(); ++q) e = std::max(e, std::abs(a[q] - b[q]));
    const double m = max_abs(b);
    return m > 0 ? e / m : e;
}

} // namespace testing
