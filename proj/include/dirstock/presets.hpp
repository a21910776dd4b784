#pragma once

#include "dirstock/grids.hpp"
#include "dirstock/signals.hpp"
#include "dirstock/windows.hpp"

namespace dirstock::presets {

// Reference problem shared by the CLI verify commands, the tests and the acceptance suite.
inline constexpr std::size_t grid_n = 128;
inline constexpr double grid_dx = 0.125;
inline constexpr double b_reach = 50.0;
inline constexpr double a_min = 0.15;
inline constexpr double a_max = 7.9;
inline constexpr std::size_t angles = 64;
inline constexpr std::size_t scales_per_sign = 24;

inline constexpr std::size_t atom_count = 6;
inline constexpr double atom_rho = 4.0;
inline constexpr double atom_sigma = 1.4;
inline constexpr double atom_spread = 0.3;
inline constexpr std::uint64_t atom_seed = 7;

// 128 * 2^level samples per side on a fixed extent.
SignalGrid2D geometry(int level = 0);
AtomSignal signal(std::uint64_t seed = atom_seed);
// bump(1, 1)
Window1D window();
// Offsets on the grid lattice over [-b_reach, b_reach] at the given grid level.
CoefficientAxes axes(std::size_t n_angles = angles, std::size_t per_sign = scales_per_sign,
                     int level = 0);

} // namespace dirstock::presets
