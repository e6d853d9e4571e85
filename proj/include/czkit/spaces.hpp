#ifndef CZKIT_SPACES_HPP
#define CZKIT_SPACES_HPP

#include <cstdint>
#include <vector>

#include "czkit/interval.hpp"
#include "czkit/kernels.hpp"
#include "czkit/sampled_function.hpp"
#include "czkit/wavelets.hpp"

namespace czkit {

/// sup over dyadic Omega in the window of
/// (|Omega|^{-1} sum_{I subset Omega} |c_I|^2)^{1/2}.
double bmo_wavelet_norm(const CoefficientMap& c, const LagomWindow& window);

/// Same with the sum restricted to I not in D_M.
double cmo_modulus(const CoefficientMap& c, int M, const LagomWindow& window);

/// Smooth mean-zero profile supported in I, L^{p'}-normalized to |I|^{-1/p}.
struct AtomH1 {
    Interval support;
    SampledFunction profile;
    double p = 2.0;
};

/// Deterministic atoms; shape_seed selects among smooth mean-zero shapes.
AtomH1 make_atom(const Interval& I, std::uint64_t shape_seed, double p);

/// For each M in m_range: sup over the atom family of
/// |<P_M^perp T(1), f>|, the T(1) coefficients taken from the limiting
/// functional applied to each mean-zero psi_J outside D_M.
std::vector<double> t1_in_cmo_test(const CZKernel& K, const WaveletBasis& basis,
                                   const std::vector<AtomH1>& atoms,
                                   const LagomWindow& window, const std::vector<int>& m_range);

/// T(1) wavelet coefficients over the window (limiting functional per psi_J).
CoefficientMap t1_coefficients(const CZKernel& K, const WaveletBasis& basis,
                               const LagomWindow& window, int k_limit = 10);

} // namespace czkit

#endif
