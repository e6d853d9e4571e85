#ifndef CZKIT_PARAPRODUCT_HPP
#define CZKIT_PARAPRODUCT_HPP

#include <string>
#include <vector>

#include "czkit/kernels.hpp"
#include "czkit/operators.hpp"
#include "czkit/wavelets.hpp"

namespace czkit {

/// The paraproduct <T_b f, g> = sum_I <b,psi_I> <f,phi_I> <g,psi_I> with
/// L1-normalized companion profiles phi_I of integral one.
struct Paraproduct {
    CoefficientMap b_coeff; // <b, psi_I> over the window
    const WaveletBasis* basis = nullptr;
    LagomWindow window;

    /// Sum floor for kernel_eval: below this |t-x| the window sum no
    /// longer approximates the infinite one.
    double kernel_floor() const { return std::ldexp(1.0, -(window.j_max + 2)); }
};

Paraproduct make_paraproduct(const WaveletBasis& basis, const LagomWindow& window,
                             const CoefficientMap& b_coeff);
Paraproduct make_paraproduct(const WaveletBasis& basis, const LagomWindow& window,
                             const SampledFunction& b, double panel_h = 0.5);

/// Builtin symbols: "gauss_cos" (e^{-x^2} cos 3x), "bump", "single_wavelet:j,k".
SampledFunction builtin_symbol(const std::string& spec, const WaveletBasis& basis);

struct PairValue {
    double value;
    double truncation_residual; // boundary-scale contribution estimate
};

/// Window-truncated pairing in sorted interval order.
PairValue pair(const Paraproduct& P, const SampledFunction& f, const SampledFunction& g,
               double panel_h = 0.5);

/// K(t,x) = sum_I <b,psi_I> phi_I(t) psi_I(x); requires |t-x| above the floor.
double kernel_eval(const Paraproduct& P, double t, double x);

/// CZKernel wrapper around kernel_eval (bounded class, delta = 1).
CZKernel as_kernel(const Paraproduct& P);

struct SmoothnessReport {
    double fitted_constant = 0.0; // quotient / (||P_M^perp b||_bmo + 2^{-M})
    double max_quotient = 0.0;
    std::size_t samples = 0;
};

/// Samples |K(t,x)-K(t',x)| |t-x|^2 / |t-t'| in the three regimes
/// (|t-x| large, |t+x| large, |t-x| small) and fits the constant against
/// ||P_M^perp b||_{BMO-wavelet} + 2^{-M}.
SmoothnessReport kernel_smoothness_check(const Paraproduct& P, int M, std::size_t n_samples);

/// Matrix of T_b from the triple-product formula (no singular quadrature):
/// A = G_psi^T diag(<b,psi>) G_phi with G_phi[I',I] = <psi_I, phi_I'>.
CoefficientMatrix paraproduct_matrix(const Paraproduct& P);

struct ParaproductCompactness {
    std::vector<double> tail_norms;     // per M in m_range
    std::vector<double> pm_perp_b_bmo;  // ||P_M^perp b||_{BMO-wavelet}
    double fitted_constant = 0.0;       // tail <= C * ||P_M^perp b||
};

ParaproductCompactness paraproduct_compactness(const Paraproduct& P,
                                               const std::vector<int>& m_range);

} // namespace czkit

#endif
