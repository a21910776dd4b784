#pragma once

#include <span>

#include "dirstock/common.hpp"

namespace dirstock::fft {

// Unnormalized in-place transforms. sign = -1 computes sum x_n e^{-2 pi i kn/N},
// sign = +1 the conjugate kernel. Plans are cached per (size, sign) and the cache
// is safe to use from several threads.
void transform(std::span<cplx> data, int sign);

// Row-major ny x nx array, same sign convention on both axes.
void transform2d(std::span<cplx> data, std::size_t ny, std::size_t nx, int sign);

std::size_t next_pow2(std::size_t n);
// Smallest 2^i 3^j 5^k >= n.
std::size_t next_fast(std::size_t n);

} // namespace dirstock::fft
