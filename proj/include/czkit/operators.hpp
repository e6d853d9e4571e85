#ifndef CZKIT_OPERATORS_HPP
#define CZKIT_OPERATORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "czkit/admissible.hpp"
#include "czkit/interval.hpp"
#include "czkit/kernels.hpp"
#include "czkit/wavelets.hpp"

namespace czkit {

/// Dense matrix A[I,J] = <T psi_I, psi_J> over a window, row index J
/// (output side), column index I (input side).
struct CoefficientMatrix {
    std::vector<DyadicInterval> intervals; // sorted by (j,k)
    std::vector<double> data;              // data[jdx * n + idx]
    std::string kernel_id;
    std::uint64_t spec_hash = 0;
    std::size_t pv_extension_entries = 0; // entries beyond disjoint-support Def 2.3

    std::size_t size() const { return intervals.size(); }
    double& at(std::size_t in_idx, std::size_t out_idx) {
        return data[out_idx * intervals.size() + in_idx];
    }
    double at(std::size_t in_idx, std::size_t out_idx) const {
        return data[out_idx * intervals.size() + in_idx];
    }
    std::size_t index_of(const DyadicInterval& I) const;
    double value(const DyadicInterval& I, const DyadicInterval& J) const {
        return at(index_of(I), index_of(J));
    }
};

struct AssemblyOptions {
    int threads = 0;            // 0: library default
    std::string cache_dir;      // empty: no caching
};

/// Full window assembly.  Kernel evaluations are shared across wavelets
/// through per-scale node grids; pv_odd kernels use exact per-piece
/// principal-value integration of the pole factor.
CoefficientMatrix assemble(const CZKernel& K, const WaveletBasis& basis,
                           const LagomWindow& window, const AssemblyOptions& opt = {});

/// Reference single-entry path (same quadrature organization).
double dual_pair(const CZKernel& K, const WaveletBasis& basis, const DyadicInterval& I,
                 const DyadicInterval& J);

/// Largest singular value by power iteration on A^T A, deterministic
/// all-ones start, relative tolerance 1e-8.
double op_norm(const CoefficientMatrix& A);

/// Spectral norm of A with output rows restricted to J not in D_M.
double tail_norm(const CoefficientMatrix& A, int M);

/// (T psi_U)(y): kernel applied to a basis wavelet, pointwise.
double apply_to_wavelet(const CZKernel& K, const WaveletBasis& basis, const DyadicInterval& U,
                        double y);

/// (T f)(y) for a general smooth compactly supported f.
double apply_to_function(const CZKernel& K, const SampledFunction& f, double y);

struct WeakCompactnessFit {
    double weak_constant = 0.0; // max residual over the family
    int M_fitted = 1;
    std::vector<std::pair<DyadicInterval, double>> table; // per-I residuals
};

/// Canonical family scan: residuals |<T(plateau_I), psi-bump_I>| for every
/// window interval; fits the smallest M with no residual above
/// weak_constant * (F_W(I;M) + eps) outside D_M.
WeakCompactnessFit weak_compactness_scan(const CZKernel& K, const WaveletBasis& basis,
                                         const LagomWindow& window,
                                         const AdmissibleTriple& weak_triple, double eps);

struct BoundParameters {
    double theta = 0.1;
    double delta = 1.0;     // kernel Hoelder exponent
    double delta_prime() const { return delta - theta * (1.0 + delta); }
};

struct Prop47Result {
    double constant = 0.0;
    DyadicInterval arg_I, arg_J;
};

/// Fitted constant of |A[I,J]| rdist^{1+delta'} /
/// (ec^{1/2+delta'} (F(I_1..I_6;M)+eps)) over all window pairs.
Prop47Result prop47_bound_check(const CoefficientMatrix& A, const BoundParameters& params,
                                const FBound& fb, double eps);

/// Necessity-shape fit: residuals of the canonical diagonal family against
/// (1+|I|/2^M)^{-alpha}(1+2^{-M}/|I|)^{-alpha}(1+rdist(I,B_{2^M})/M)^{-N}
/// plus the tail norm; returns the fitted constant.
double necessity_bound_check(const CZKernel& K, const WaveletBasis& basis,
                             const CoefficientMatrix& A, double p, int M, int N = 2);

struct T1Sample {
    double value;
    double error_bound;
};

/// <T(T_a D_{2^k |I|} Phi), f> for mean-zero f supported in I, with the
/// geometric-series error bound C 2^{-k delta} F~_K(2^k I) ||f||_1.
T1Sample t1_functional(const CZKernel& K, const SampledFunction& f, const Interval& I, int k,
                       double a);

/// Limit surrogate: value at k_limit (default 12).
double t1_limit(const CZKernel& K, const SampledFunction& f, const Interval& I,
                int k_limit = 12);

} // namespace czkit

#endif
