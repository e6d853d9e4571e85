#ifndef CZKIT_ADMISSIBLE_HPP
#define CZKIT_ADMISSIBLE_HPP

#include <functional>
#include <string>
#include <vector>

#include "czkit/interval.hpp"

namespace czkit {

using RealFn = std::function<double(double)>;

/// A triple (L, S, D) of bounded functions [0,inf) -> [0,inf).
/// Admissibility asks L and D to vanish at infinity and S at zero;
/// check_limits() certifies that empirically at the grid endpoints.
struct AdmissibleTriple {
    RealFn L, S, D;
    double bound = 1.0; // uniform sup bound for all three components
    bool mono_L = false; // L nonincreasing
    bool mono_S = false; // S nondecreasing
    bool mono_D = false; // D nonincreasing

    double product(double l_arg, double s_arg, double d_arg) const {
        return L(l_arg) * S(s_arg) * D(d_arg);
    }
};

/// Geometric evaluation grid x = 2^{j/4}, j in [-80, 80], shared by the
/// regularization and the empirical limit certificates.
std::vector<double> admissible_grid();

/// Running-sup regularization on the geometric grid:
/// L1(x) = sup_{y>=x} L(y), S1(x) = sup_{y<=x} S(y), D1(x) = sup_{y>=x} D(y).
/// The output dominates the input pointwise and has the monotone flags set.
AdmissibleTriple regularize_monotone(const AdmissibleTriple& t);

/// L_lambda(x) = L(x/lambda), and likewise for S and D.
AdmissibleTriple dilate_triple(const AdmissibleTriple& t, double lambda);

/// Empirical certificate of Eq.-style limits: L(2^20), S(2^-20), D(2^20)
/// all below 0.05 * bound.
bool check_limits(const AdmissibleTriple& t);

/// Named builtin triples for CLI configs: "power:alpha", "exp", "zero".
AdmissibleTriple builtin_triple(const std::string& spec);

/// Pairs a kernel-side and a weak-compactness-side triple with the
/// lagom parameter M, and evaluates the combined bound functions.
struct FBound {
    AdmissibleTriple kernel_triple;
    AdmissibleTriple weak_triple;
    int M = 1;
};

/// F_K(I) = L_K(|I|) S_K(|I|) D_K(rdist(I, B_1)).
double f_k(const FBound& fb, const Interval& I);

/// F_W(I;M) = L_W(2^{-M}|I|) S_W(2^{M}|I|) D_W(M^{-1} rdist(I, B_{2^M})).
double f_w(const FBound& fb, const Interval& I, int M);

/// F(I;M) = F_K(I) + F_W(I;M).
double f_single(const FBound& fb, const Interval& I, int M);

/// Multi-interval variant: each of F_K and F_W takes the sum-of-factors
/// form (sum L_i)(sum S_i)(sum D_i); the result is their sum.
double f_joint(const FBound& fb, const std::vector<Interval>& intervals, int M);

} // namespace czkit

#endif
