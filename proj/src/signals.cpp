#include "dirstock/signals.hpp"

#include <cmath>
#include <random>

#include "dirstock/fft.hpp"

namespace dirstock {
namespace {

// k-th derivative of e^{phi(t)}, phi = -t^2/(2 s^2) + i nu t, divided by e^{phi}.
cplx gauss_deriv_factor(double t, double nu, double sigma, int k) {
    const cplx d1 = cplx(-t / (sigma * sigma), nu);
    const double d2 = -1.0 / (sigma * sigma);
    switch (k) {
    case 0: return 1.0;
    case 1: return d1;
    case 2: return d1 * d1 + d2;
    case 3: return d1 * d1 * d1 + 3.0 * d1 * d2;
    case 4: return d1 * d1 * d1 * d1 + 6.0 * d1 * d1 * d2 + 3.0 * d2 * d2;
    default: throw InvalidArgument("gabor atom: derivative order above 4");
    }
}

} // namespace

cplx GaborAtom::value(double px, double py) const {
    const double u = px - x, v = py - y;
    return c * std::exp(cplx(-(u * u + v * v) / (2 * sigma * sigma), nu_x * u + nu_y * v));
}

cplx GaborAtom::spectrum(double wx, double wy) const {
    const double ux = wx - nu_x, uy = wy - nu_y;
    return c * two_pi * sigma * sigma *
           std::exp(cplx(-0.5 * sigma * sigma * (ux * ux + uy * uy), -(wx * x + wy * y)));
}

cplx AtomSignal::value(double x, double y) const {
    cplx s{};
    for (const auto& a : atoms) s += a.value(x, y);
    return s;
}

cplx AtomSignal::spectrum(double wx, double wy) const {
    cplx s{};
    for (const auto& a : atoms) s += a.spectrum(wx, wy);
    return s;
}

SignalGrid2D AtomSignal::sample(const SignalGrid2D& geometry) const {
    return sample_derivative(geometry, 0, 0);
}

SignalGrid2D AtomSignal::sample_derivative(const SignalGrid2D& geometry, int a1, int a2) const {
    SignalGrid2D g = geometry.zeros_like();
    for (std::size_t iy = 0; iy < g.ny; ++iy)
        for (std::size_t ix = 0; ix < g.nx; ++ix) {
            cplx s{};
            for (const auto& a : atoms) {
                const double u = g.x(ix) - a.x, v = g.y(iy) - a.y;
                s += a.value(g.x(ix), g.y(iy)) * gauss_deriv_factor(u, a.nu_x, a.sigma, a1) *
                     gauss_deriv_factor(v, a.nu_y, a.sigma, a2);
            }
            g.at(ix, iy) = s;
        }
    return g;
}

double AtomSignal::norm2() const {
    // <A, B> for two atoms is a Gaussian integral in closed form.
    cplx s{};
    for (const auto& a : atoms)
        for (const auto& b : atoms) {
            const double sa = 1 / (a.sigma * a.sigma), sb = 1 / (b.sigma * b.sigma);
            const double al = 0.5 * (sa + sb);
            // exponent: -(sa|x-xa|^2 + sb|x-xb|^2)/2 + i nu_a.(x-xa) - i nu_b.(x-xb)
            cplx tot = 1.0;
            for (int d = 0; d < 2; ++d) {
                const double xa = d ? a.y : a.x, xb = d ? b.y : b.x;
                const double na = d ? a.nu_y : a.nu_x, nb = d ? b.nu_y : b.nu_x;
                const cplx beta = cplx(sa * xa + sb * xb, na - nb);
                const cplx c0 = cplx(-0.5 * (sa * xa * xa + sb * xb * xb), -na * xa + nb * xb);
                tot *= std::sqrt(pi / al) * std::exp(beta * beta / (4 * al) + c0);
            }
            s += a.c * std::conj(b.c) * tot;
        }
    return s.real();
}

AtomSignal annulus_signal(std::size_t atoms, double rho, double sigma, double spread,
                          std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto uni = [&] { return double(rng() >> 11) * 0x1.0p-53; };
    AtomSignal s;
    for (std::size_t q = 0; q < atoms; ++q) {
        GaborAtom a;
        const double dir = two_pi * uni();
        const double r = spread * std::sqrt(uni()), pa = two_pi * uni();
        a.x = r * std::cos(pa);
        a.y = r * std::sin(pa);
        a.nu_x = rho * std::cos(dir);
        a.nu_y = rho * std::sin(dir);
        a.sigma = sigma;
        a.c = std::polar(0.5 + uni(), two_pi * uni());
        s.atoms.push_back(a);
    }
    return s;
}

SignalGrid2D gaussian_grid(const SignalGrid2D& geometry, double sigma) {
    SignalGrid2D g = geometry.zeros_like();
    for (std::size_t iy = 0; iy < g.ny; ++iy)
        for (std::size_t ix = 0; ix < g.nx; ++ix) {
            const double r2 = g.x(ix) * g.x(ix) + g.y(iy) * g.y(iy);
            g.at(ix, iy) = std::exp(-r2 / (2 * sigma * sigma));
        }
    return g;
}

SignalGrid2D make_grid(std::size_t n, double dx) {
    const double x0 = -double(n / 2) * dx;
    return SignalGrid2D(n, n, x0, x0, dx, dx);
}

SignalGrid2D spectral_derivative(const SignalGrid2D& f, int a1, int a2) {
    require(a1 >= 0 && a2 >= 0, "spectral_derivative: negative order");
    std::vector<cplx> F = f.values;
    fft::transform2d(F, f.ny, f.nx, -1);
    for (std::size_t ky = 0; ky < f.ny; ++ky) {
        const long sy = ky < f.ny / 2 ? long(ky) : long(ky) - long(f.ny);
        const double wy = two_pi * double(sy) / (double(f.ny) * f.dy);
        for (std::size_t kx = 0; kx < f.nx; ++kx) {
            const long sx = kx < f.nx / 2 ? long(kx) : long(kx) - long(f.nx);
            const double wx = two_pi * double(sx) / (double(f.nx) * f.dx);
            cplx m = 1.0;
            for (int q = 0; q < a1; ++q) m *= cplx(0, wx);
            for (int q = 0; q < a2; ++q) m *= cplx(0, wy);
            // The Nyquist bin has no well-defined odd derivative.
            if ((f.nx % 2 == 0 && kx == f.nx / 2 && a1 % 2) || (f.ny % 2 == 0 && ky == f.ny / 2 && a2 % 2))
                m = 0;
            F[ky * f.nx + kx] *= m / double(f.nx * f.ny);
        }
    }
    fft::transform2d(F, f.ny, f.nx, +1);
    SignalGrid2D out = f.zeros_like();
    out.values = std::move(F);
    return out;
}

} // namespace dirstock
