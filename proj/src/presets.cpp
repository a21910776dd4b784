#include "dirstock/presets.hpp"

#include <cmath>

namespace dirstock::presets {

SignalGrid2D geometry(int level) {
    const double s = std::ldexp(1.0, level);
    return make_grid(std::size_t(double(grid_n) * s), grid_dx / s);
}

AtomSignal signal(std::uint64_t seed) {
    return annulus_signal(atom_count, atom_rho, atom_sigma, atom_spread, seed);
}

Window1D window() { return freq_bump_window(1.0, 1.0); }

CoefficientAxes axes(std::size_t n_angles, std::size_t per_sign, int level) {
    const double db = grid_dx / std::ldexp(1.0, level);
    const auto nb = std::size_t(std::llround(2 * b_reach / db)) + 1;
    return make_coefficient_axes(n_angles, {-b_reach, b_reach, nb}, {a_min, a_max, per_sign});
}

} // namespace dirstock::presets
