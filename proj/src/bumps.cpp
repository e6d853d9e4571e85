#include "czkit/bumps.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "czkit/quadrature.hpp"

namespace czkit {

double adaptedness_constant(const SampledFunction& f, const Interval& I, double p, int N,
                            const GridSpec& grid) {
    if (f.order < N)
        throw std::invalid_argument("adaptedness_constant: derivatives up to N not available");
    double lo = I.center - 0.5 * I.length - grid.radius;
    double hi = I.center + 0.5 * I.length + grid.radius;
    if (f.support) {
        lo = std::max(lo, f.support->left());
        hi = std::min(hi, f.support->right());
    }
    if (!(hi > lo)) return 0.0;
    const double step = 1.0 / grid.points_per_unit;
    const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
    double best = 0.0;
    const auto n_pts = static_cast<std::int64_t>(std::ceil((hi - lo) / step));
    for (int n = 0; n <= N; ++n) {
        const double size_factor = std::pow(I.length, inv_p + n);
        for (std::int64_t i = 0; i <= n_pts; ++i) {
            const double x = lo + step * (static_cast<double>(i) + 0.382); // off-lattice
            if (x > hi) break;
            const double v = std::abs(f.eval(x, n));
            if (v == 0.0) continue;
            best = std::max(best, v * size_factor * std::pow(weight_w(I, x), N));
        }
    }
    return best;
}

SampledFunction inner_cutoff(const SampledFunction& f, const Interval& I, const Interval& J,
                             double lambda) {
    if (std::abs(I.length - J.length) > 1e-12 * I.length)
        throw std::invalid_argument("inner_cutoff: |J| must equal |I|");
    if (!(lambda > 0.0)) throw std::invalid_argument("inner_cutoff: lambda must be > 0");
    return product(f, cutoff_on(J.dilated(lambda)));
}

SampledFunction outer_cutoff(const SampledFunction& f, const Interval& I, const Interval& J,
                             double theta) {
    if (J.length > I.length) throw std::invalid_argument("outer_cutoff: need |J| <= |I|");
    if (!(theta > 0.0 && theta < 1.0))
        throw std::invalid_argument("outer_cutoff: need 0 < theta < 1");
    const double lambda = std::pow(diam_union(I, J) / J.length, theta) / 32.0;
    auto cut = cutoff_on(J.dilated(lambda));
    // 1 - Phi_{lambda J}: complement keeps f's support.
    SampledFunction comp(
        [cut](double x, int n) {
            const double v = cut.eval(x, n);
            return n == 0 ? 1.0 - v : -v;
        },
        cut.order, std::nullopt);
    auto g = product(f, comp);
    g.support = f.support;
    return g;
}

SampledFunction plateau_bump(const Interval& J, double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("plateau_bump: lambda must be > 0");
    const double amp = 1.0 / std::sqrt(lambda * J.length);
    auto cut = cutoff_on(J.dilated(lambda));
    return SampledFunction([cut, amp](double x, int n) { return amp * cut.eval(x, n); },
                           cut.order, cut.support);
}

SampledFunction moment_bump(const Interval& J, int k) {
    if (k < 0) throw std::invalid_argument("moment_bump: k must be >= 0");
    auto cut = cutoff_on(J);
    const double amp = 1.0 / std::sqrt(J.length);
    const double c = J.center;
    return SampledFunction(
        [cut, amp, c, k](double x, int n) {
            // Leibniz against the polynomial (x-c)^k.
            double s = 0.0, binom = 1.0;
            for (int i = 0; i <= n; ++i) {
                const int pd = n - i; // derivative order on the polynomial
                if (pd <= k) {
                    double fac = 1.0;
                    for (int q = 0; q < pd; ++q) fac *= static_cast<double>(k - q);
                    s += binom * cut.eval(x, i) * fac * std::pow(x - c, k - pd);
                }
                binom *= static_cast<double>(n - i) / static_cast<double>(i + 1);
            }
            return amp * s;
        },
        cut.order, cut.support);
}

double recenter_constant(const Interval& I, const Interval& J, int N) {
    if (std::abs(I.center - J.center) > 1e-12 * std::max(I.length, J.length))
        throw std::invalid_argument("recenter_constant: intervals must be concentric");
    return std::pow(ec(I, J), -(N + 0.5));
}

double integrate_function(const SampledFunction& f, double a, double b, double h, int n_gl) {
    if (f.support) {
        a = std::max(a, f.support->left());
        b = std::min(b, f.support->right());
    }
    if (!(b > a)) return 0.0;
    return integrate_cells([&f](double x) { return f.value(x); }, a, b, h, n_gl);
}

double pair_integral(const SampledFunction& f, const SampledFunction& g, double scale_f,
                     double scale_g) {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    if (f.support) {
        lo = std::max(lo, f.support->left());
        hi = std::min(hi, f.support->right());
    }
    if (g.support) {
        lo = std::max(lo, g.support->left());
        hi = std::min(hi, g.support->right());
    }
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw std::invalid_argument("pair_integral: unbounded intersection of supports");
    if (!(hi > lo)) return 0.0;
    const double h = 0.5 * std::min(scale_f, scale_g);
    return integrate_cells([&](double x) { return f.value(x) * g.value(x); }, lo, hi, h, 16);
}

PairDecay pair_decay_check(const SampledFunction& phi, const Interval& I,
                           const SampledFunction& psi, const Interval& J, int N,
                           bool mean_zero) {
    PairDecay out;
    out.measured = std::abs(pair_integral(phi, psi, I.length, J.length));
    const double rd = rdist(I, J);
    if (mean_zero) {
        if (J.length > I.length)
            throw std::invalid_argument("pair_decay_check: mean-zero bound needs |J| <= |I|");
        out.bound = std::pow(J.length / I.length, 1.5) * std::pow(rd, -(N - 1));
    } else {
        out.bound = std::sqrt(ec(I, J)) * std::pow(rd, -N);
    }
    return out;
}

SampledFunction mean_zero_projection(const SampledFunction& f, const Interval& window) {
    auto plateau = cutoff_on(window.dilated(0.5));
    const double h = window.length / 256.0;
    const double mass = integrate_function(plateau, window.left() - window.length,
                                           window.right() + window.length, h);
    const double mean = integrate_function(f, window.left(), window.right(), h);
    return axpy(f, -mean / mass, plateau);
}

} // namespace czkit
