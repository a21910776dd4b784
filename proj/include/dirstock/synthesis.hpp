#pragma once

#include <string>
#include <utility>

#include "dirstock/dst.hpp"

namespace dirstock {

struct VerificationReport {
    cplx lhs;
    cplx rhs;
    double abs_error = 0;
    double rel_error = 0;
    std::string summary;

    // rel_error = |lhs - rhs| / max(|lhs|, |rhs|, 1e-300)
    static VerificationReport compare(cplx lhs, cplx rhs, std::string summary);
};

struct SynthesisOptions {
    // Fine p-grid spacing times the half-bandwidth of one octave of scales. Quintic Hermite
    // interpolation error scales like the sixth power of this number.
    double resolution = 0.1;
};

// DS*Phi(x) = sum w Phi psi_{u,b,a}(x), psi_{u,b,a}(x) = (|a|/2pi) psi(a(x.u - b)) e^{ia x.u}.
SignalGrid2D synthesize(const CoefficientVolume& Phi, const Window1D& psi,
                        const SignalGrid2D& target, const SynthesisOptions& opt = {});

// f_rec = synthesize(DS_psi f, eta) / C_{psi,eta}. The report holds ||f||, ||f_rec||
// and the relative L2 residual ||f_rec - f|| / ||f||.
std::pair<SignalGrid2D, VerificationReport> reconstruct(const SignalGrid2D& f,
                                                        const Window1D& psi,
                                                        const Window1D& eta,
                                                        const CoefficientAxes& axes,
                                                        const DstOptions& opt = {});

// lhs = (f, h); rhs = (DS_psi f, DS_eta h)_Y / C_{psi,eta}.
VerificationReport parseval_check(const SignalGrid2D& f, const SignalGrid2D& h,
                                  const Window1D& psi, const Window1D& eta,
                                  const CoefficientAxes& axes, const DstOptions& opt = {});

// lhs = sum f conj(DS*_psi(conj Phi)) dx dy; rhs = sum w DS_psi f Phi.
VerificationReport transpose_check(const SignalGrid2D& f, const Window1D& psi,
                                   const CoefficientVolume& Phi, const DstOptions& opt = {});

// Discrete scale sum relative to its continuous value at radial frequency rho:
// sum_k da_k |a_k|^{n-2} conj(psi_hat(rho/a_k - 1)) eta_hat(rho/a_k - 1) / (pi C |rho|^{n-1}).
cplx scale_multiplier(const Window1D& psi, const Window1D& eta, const CoefficientAxes& axes,
                      cplx C, double rho);

// Relative L2 error caused by truncating and discretizing the scale axis, weighted by
// the spectrum of f. This is the error reconstruction would have with exact angle and
// offset integrals; it is an estimate, not a bound, once those are discretized too.
double scale_truncation_error(const SignalGrid2D& f, const Window1D& psi, const Window1D& eta,
                              const CoefficientAxes& axes);

} // namespace dirstock
