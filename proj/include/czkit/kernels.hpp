#ifndef CZKIT_KERNELS_HPP
#define CZKIT_KERNELS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "czkit/admissible.hpp"

namespace czkit {

enum class SingularityClass {
    bounded, // K extends continuously across the diagonal
    pv_odd   // K = sigma(t,x)/(t-x) with smooth symbol sigma
};

enum class KernelSymmetry { none, symmetric, antisymmetric };

/// Which arguments the attached triple takes on a smoothness tuple:
/// def22:   L(|t-x|) S(|t-x|) D(|t+x|)
/// lemma39: L(|t-x|) S(|t-t'|+|x-x'|) D(1 + |t+x|/(1+|t-x|))
enum class TripleConvention { def22, lemma39 };

struct CZKernel {
    std::string name;
    std::function<double(double, double)> eval; // K(t,x), t != x
    double delta = 1.0;
    double constant = 1.0;
    SingularityClass sclass = SingularityClass::bounded;
    std::optional<AdmissibleTriple> triple;
    TripleConvention convention = TripleConvention::def22;

    // pv_odd kernels: K(t,x)*(t-x) = symbol(t,x), with t-partial for the
    // diagonal Taylor correction.
    std::function<double(double, double)> symbol;
    std::function<double(double, double)> symbol_dt;
    bool symbol_is_constant = false;

    bool symbol_constant() const { return symbol_is_constant; }

    /// Length scale below which the kernel varies; quadrature panel cap.
    double variation_scale = 0.5;
    KernelSymmetry symmetry = KernelSymmetry::none;

    double operator()(double t, double x) const { return eval(t, x); }
};

/// K'(t,x) = K(x,t); used for adjoint applications.
CZKernel swapped_kernel(const CZKernel& K);

/// |K(t,x)-K(t',x')| |t-x|^{1+delta} / (|t-t'|+|x-x'|)^{delta}.
/// Requires the admissibility constraint 2(|t-t'|+|x-x'|) < |t-x|.
double smoothness_ratio(const CZKernel& K, double t, double x, double tp, double xp);

/// Deterministic low-discrepancy tuples (t, x, t', x') satisfying the
/// smoothness constraint; Halton-driven, reproducible bit for bit.
struct SampleSpec {
    std::size_t count = 4096;
    double r_lo = 1.0 / 256.0; // range of |t-x|
    double r_hi = 16.0;
    double center_max = 2048.0; // max |(t+x)/2|, log-spread
};

struct SampleTuple {
    double t, x, tp, xp;
};

std::vector<SampleTuple> sample_tuples(const SampleSpec& spec);

struct KernelViolation {
    SampleTuple tuple;
    double ratio;
    double bound;
};

struct KernelDiagnostics {
    double fitted_constant = 0.0;
    std::vector<KernelViolation> violations;
    // Envelope samples (x, value) for the fitted L1, S1, D1.
    std::vector<std::pair<double, double>> env_L, env_S, env_D;
};

/// Checks the declared triple: fitted constant = max ratio / (L S D) over
/// the sample; violations above declared constant x 1.05 slack.
KernelDiagnostics verify_compact_czk(const CZKernel& K, const SampleSpec& spec);

struct EnvelopeCertificate {
    double f_tilde;      // the summed envelope
    double kernel_side;  // |K(t,x)| |t-x|
    double margin;       // f_tilde - kernel_side
    int terms;
};

/// Decay certificate along the escape sequence t_n, x_n moving apart by
/// (1-eps)/4 |t_n - x_n| per step: F~ = C sum (4/3)^{-k} F(t_k,x_k) and
/// the check |K(t,x)| |t-x| <= F~.
EnvelopeCertificate decay_envelope(const CZKernel& K, double t, double x, double eps);

/// Cube-root sup-envelopes of the smoothness ratio over the three
/// coordinates |t-x| >= y, |t-t'|+|x-x'| <= y, 1+|t+x|/(1+|t-x|) >= y,
/// tabulated on the geometric grid.  Output is lemma39-convention.
AdmissibleTriple fit_admissible(const CZKernel& K, const SampleSpec& spec);

/// Sampled sup over t' (64 log-spaced offsets, both sides) of
/// |t-x|^{1+delta'} / |t-t'|^{delta'} |K(t,x)-K(t',x)|.
double regularity_profile(const CZKernel& K, double t, double x, double delta_p,
                          int n_offsets = 64);

/// Builtin zoo: zero, hilbert, commutator_gauss, damped_hilbert.
/// (Paraproduct kernels are built by the paraproduct module.)
CZKernel builtin_kernel(const std::string& name);

} // namespace czkit

#endif
