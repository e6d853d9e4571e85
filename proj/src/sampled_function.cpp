#include "czkit/sampled_function.hpp"

#include <cmath>
#include <limits>

#include "czkit/jet.hpp"

namespace czkit {

namespace {

constexpr std::size_t kJetOrder = 8;
using J8 = Jet<kJetOrder>;

// Jet of g(y) = e^{-1/y} at y0 > 0.
J8 glue_jet(double y0) {
    return exp(reciprocal_of_x<kJetOrder>(y0) * -1.0);
}

// Jet of the smooth step s(y) = g(y) / (g(y) + g(1-y)) at y0 in (0,1).
J8 step_jet(double y0) {
    J8 gy = glue_jet(y0);
    // g(1-y): jet of g at 1-y0 with alternating-sign chain rule.
    J8 g1 = glue_jet(1.0 - y0);
    for (std::size_t n = 1; n <= kJetOrder; n += 2) g1.a[n] = -g1.a[n];
    return gy / (gy + g1);
}

} // namespace

double smooth_step(double y, int n) {
    if (y <= 0.0) return 0.0;
    if (y >= 1.0) return n == 0 ? 1.0 : 0.0;
    return step_jet(y).derivative(static_cast<std::size_t>(n));
}

double cutoff_value(double x, int n) {
    const double ax = std::abs(x);
    if (ax <= 1.0) return n == 0 ? 1.0 : 0.0;
    if (ax >= 2.0) return 0.0;
    // Phi(x) = s(2 - |x|); chain rule gives (-1)^n on the right branch.
    double v = smooth_step(2.0 - ax, n);
    if (n % 2 == 1) v = -v;
    if (x < 0.0 && n % 2 == 1) v = -v;
    return v;
}

SampledFunction cutoff_profile() {
    return SampledFunction([](double x, int n) { return cutoff_value(x, n); },
                           static_cast<int>(kJetOrder), Interval(0.0, 4.0));
}

SampledFunction translate_dilate(const SampledFunction& f, double a, double lambda, double p) {
    if (!(lambda > 0.0)) throw std::invalid_argument("translate_dilate: lambda must be > 0");
    if (!(p > 0.0)) throw std::invalid_argument("translate_dilate: p must be > 0 or infinity");
    const double amp = std::isinf(p) ? 1.0 : std::pow(lambda, -1.0 / p);
    std::optional<Interval> supp;
    if (f.support)
        supp = Interval(f.support->center * lambda + a, f.support->length * lambda);
    return SampledFunction(
        [f, a, lambda, amp](double x, int n) {
            return amp * std::pow(lambda, -n) * f.eval((x - a) / lambda, n);
        },
        f.order, supp);
}

SampledFunction axpy(const SampledFunction& f, double c, const SampledFunction& g) {
    std::optional<Interval> supp;
    if (f.support && g.support) {
        const double lo = std::min(f.support->left(), g.support->left());
        const double hi = std::max(f.support->right(), g.support->right());
        supp = Interval::from_endpoints(lo, hi);
    }
    return SampledFunction(
        [f, c, g](double x, int n) { return f.eval(x, n) + c * g.eval(x, n); },
        std::min(f.order, g.order), supp);
}

SampledFunction product(const SampledFunction& f, const SampledFunction& g) {
    std::optional<Interval> supp;
    if (f.support)
        supp = f.support;
    if (g.support && (!supp || g.support->length < supp->length)) supp = g.support;
    return SampledFunction(
        [f, g](double x, int n) {
            double s = 0.0, binom = 1.0;
            for (int k = 0; k <= n; ++k) {
                s += binom * f.eval(x, k) * g.eval(x, n - k);
                binom *= static_cast<double>(n - k) / static_cast<double>(k + 1);
            }
            return s;
        },
        std::min(f.order, g.order), supp);
}

SampledFunction cutoff_on(const Interval& I) {
    return translate_dilate(cutoff_profile(), I.center, I.length,
                            std::numeric_limits<double>::infinity());
}

} // namespace czkit
