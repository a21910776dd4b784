#include "dirstock/quadrature.hpp"

#include <cmath>

namespace dirstock {
namespace {

struct Panel {
    const std::function<cplx(double)>& f;
    QuadratureResult& out;

    void run(double a, double b, cplx fa, cplx fm, cplx fb, cplx whole, double tol,
             int depth) {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
        const cplx flm = f(lm), frm = f(rm);
        out.evaluations += 2;
        const cplx left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const cplx right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        const cplx delta = left + right - whole;
        if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
            out.value += left + right + delta / 15.0;
            out.error += std::abs(delta) / 15.0;
            return;
        }
        run(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1);
        run(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
    }
};

} // namespace

QuadratureResult adaptive_simpson(const std::function<cplx(double)>& f, double a, double b,
                                  double abs_tol, int max_depth) {
    QuadratureResult out;
    if (!(b > a)) return out;
    // A fixed first split keeps narrow features from hiding between three nodes.
    const int pieces = 16;
    const double h = (b - a) / pieces;
    for (int p = 0; p < pieces; ++p) {
        const double lo = a + p * h, hi = (p + 1 == pieces) ? b : a + (p + 1) * h;
        const double mid = 0.5 * (lo + hi);
        const cplx fa = f(lo), fm = f(mid), fb = f(hi);
        out.evaluations += 3;
        Panel{f, out}.run(lo, hi, fa, fm, fb, (hi - lo) / 6.0 * (fa + 4.0 * fm + fb),
                          abs_tol / pieces, max_depth);
    }
    return out;
}

} // namespace dirstock
