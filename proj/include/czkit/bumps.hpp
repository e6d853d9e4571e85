#ifndef CZKIT_BUMPS_HPP
#define CZKIT_BUMPS_HPP

#include "czkit/interval.hpp"
#include "czkit/sampled_function.hpp"

namespace czkit {

/// Grid used for sup-type adaptedness constants.
struct GridSpec {
    double points_per_unit = 512.0;
    double radius = 64.0; // around the interval
};

/// Smallest empirical C with |f^{(n)}(x)| <= C |I|^{-1/p-n} w_I(x)^{-N}
/// for n <= N over the grid.  p = infinity drops the |I|^{-1/p} factor.
double adaptedness_constant(const SampledFunction& f, const Interval& I, double p, int N,
                            const GridSpec& grid = {});

/// f * Phi_{lambda J}; |J| must equal |I|.
SampledFunction inner_cutoff(const SampledFunction& f, const Interval& I, const Interval& J,
                             double lambda);

/// f * (1 - Phi_{lambda J}) with lambda = (1/32)(|J|^{-1} diam(I u J))^theta.
SampledFunction outer_cutoff(const SampledFunction& f, const Interval& I, const Interval& J,
                             double theta);

/// |lambda J|^{-1/2} Phi_{lambda J}.
SampledFunction plateau_bump(const Interval& J, double lambda);

/// |J|^{-1/2} (T_{c(J)} D_{|J|} Phi)(t) (t - c(J))^k.
SampledFunction moment_bump(const Interval& J, int k);

/// Conversion factor ec(I,J)^{-(N+1/2)} between concentric intervals.
double recenter_constant(const Interval& I, const Interval& J, int N);

/// Integral of f over [a,b] by composite panels capped at width h.
double integrate_function(const SampledFunction& f, double a, double b, double h, int n_gl = 8);

/// <f, g> over the intersection of supports; panels at the finer of the
/// two given length scales (16 GL nodes per panel).
double pair_integral(const SampledFunction& f, const SampledFunction& g, double scale_f,
                     double scale_g);

struct PairDecay {
    double measured; // |<phi_I, psi_J>| by quadrature
    double bound;    // geometric factor, constant fitted by the caller
};

/// Lemma-style pairing decay: general bound ec^{1/2} rdist^{-N}; with
/// mean_zero (requires |J| <= |I|) the bound (|J|/|I|)^{3/2} rdist^{-(N-1)}.
PairDecay pair_decay_check(const SampledFunction& phi, const Interval& I,
                           const SampledFunction& psi, const Interval& J, int N,
                           bool mean_zero);

/// f minus (mean over window) times a normalized plateau on the window.
SampledFunction mean_zero_projection(const SampledFunction& f, const Interval& window);

} // namespace czkit

#endif
