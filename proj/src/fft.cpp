#include "dirstock/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace dirstock::fft {
namespace {

// FFTW planning is not thread-safe; execution on new arrays is.
std::mutex plan_mutex;
std::map<std::tuple<std::size_t, std::size_t, int>, fftw_plan> plans;

fftw_plan get_plan(std::size_t ny, std::size_t nx, int sign) {
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_tuple(ny, nx, sign);
    auto it = plans.find(key);
    if (it != plans.end()) return it->second;
    const std::size_t total = ny * nx;
    auto* buf = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * total));
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    const int dir = sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD;
    fftw_plan p = ny == 1 ? fftw_plan_dft_1d(int(nx), buf, buf, dir, flags)
                          : fftw_plan_dft_2d(int(ny), int(nx), buf, buf, dir, flags);
    fftw_free(buf);
    plans.emplace(key, p);
    return p;
}

} // namespace

void transform(std::span<cplx> data, int sign) {
    if (data.empty()) return;
    auto* p = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(get_plan(1, data.size(), sign), p, p);
}

void transform2d(std::span<cplx> data, std::size_t ny, std::size_t nx, int sign) {
    require(data.size() == ny * nx, "fft: size mismatch");
    if (data.empty()) return;
    auto* p = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(get_plan(ny, nx, sign), p, p);
}

std::size_t next_pow2(std::size_t n) {
    std::size_t m = 1;
    while (m < n) m <<= 1;
    return m;
}

std::size_t next_fast(std::size_t n) {
    if (n <= 1) return 1;
    std::size_t best = next_pow2(n);
    for (std::size_t p5 = 1; p5 < best; p5 *= 5)
        for (std::size_t p35 = p5; p35 < best; p35 *= 3) {
            std::size_t m = p35;
            while (m < n) m *= 2;
            best = std::min(best, m);
        }
    return best;
}

} // namespace dirstock::fft
