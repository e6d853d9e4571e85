#ifndef CZKIT_SAMPLED_FUNCTION_HPP
#define CZKIT_SAMPLED_FUNCTION_HPP

#include <functional>
#include <optional>
#include <stdexcept>

#include "czkit/interval.hpp"

namespace czkit {

/// Scalar function with derivative access up to a declared order.
/// Immutable after construction; all combinators return new values.
struct SampledFunction {
    /// (x, n) -> f^{(n)}(x); n <= order.
    std::function<double(double, int)> eval;
    int order = 0;
    /// Compact support [center - radius, center + radius], if any.
    std::optional<Interval> support;

    SampledFunction() = default;
    SampledFunction(std::function<double(double, int)> e, int ord,
                    std::optional<Interval> supp = std::nullopt)
        : eval(std::move(e)), order(ord), support(std::move(supp)) {}

    double value(double x) const { return eval(x, 0); }
    double derivative(double x, int n) const {
        if (n > order) throw std::invalid_argument("SampledFunction: derivative order not available");
        return eval(x, n);
    }
    bool vanishes_at(double x) const {
        return support && !support->contains(x);
    }
};

/// The fixed smooth cutoff: Phi = 1 on |x|<=1, 0 < Phi < 1 on 1 < |x| < 2,
/// Phi = 0 on |x| >= 2, built from the e^{-1/x} glue.  Derivatives to
/// order 8 are evaluated through truncated Taylor jets of the glue.
double cutoff_value(double x, int n);

/// CutoffProfile as a SampledFunction (order 8, support [-2,2]).
SampledFunction cutoff_profile();

/// Smooth step s: s = 0 for y <= 0, 1 for y >= 1, strictly increasing on (0,1).
double smooth_step(double y, int n);

/// (T_a D_lambda^p f)(x) = lambda^{-1/p} f((x-a)/lambda).
/// p = infinity gives the plain dilation with no normalization factor.
SampledFunction translate_dilate(const SampledFunction& f, double a, double lambda, double p);

/// Pointwise sum f + c*g.
SampledFunction axpy(const SampledFunction& f, double c, const SampledFunction& g);

/// Pointwise product (Leibniz rule for derivatives).
SampledFunction product(const SampledFunction& f, const SampledFunction& g);

/// The weight w_I(x) = 1 + |I|^{-1} |x - c(I)|.
inline double weight_w(const Interval& I, double x) {
    return 1.0 + std::abs(x - I.center) / I.length;
}

/// Phi_I = T_{c(I)} D_{|I|} Phi: equals 1 on 2I and 0 outside 4I.
SampledFunction cutoff_on(const Interval& I);

} // namespace czkit

#endif
