#ifndef CZKIT_JET_HPP
#define CZKIT_JET_HPP

#include <array>
#include <cmath>
#include <cstddef>

namespace czkit {

/// Truncated Taylor jet: coefficients a[n] = f^{(n)}(x0)/n! up to order N.
/// Used to evaluate derivatives of composite closed-form profiles exactly.
template <std::size_t N>
struct Jet {
    std::array<double, N + 1> a{};

    static Jet constant(double c) {
        Jet j;
        j.a[0] = c;
        return j;
    }
    /// The identity function x at the expansion point x0.
    static Jet variable(double x0) {
        Jet j;
        j.a[0] = x0;
        if constexpr (N >= 1) j.a[1] = 1.0;
        return j;
    }

    double derivative(std::size_t n) const {
        double f = 1.0;
        for (std::size_t i = 2; i <= n; ++i) f *= static_cast<double>(i);
        return a[n] * f;
    }

    Jet operator+(const Jet& o) const {
        Jet r;
        for (std::size_t i = 0; i <= N; ++i) r.a[i] = a[i] + o.a[i];
        return r;
    }
    Jet operator-(const Jet& o) const {
        Jet r;
        for (std::size_t i = 0; i <= N; ++i) r.a[i] = a[i] - o.a[i];
        return r;
    }
    Jet operator*(const Jet& o) const {
        Jet r;
        for (std::size_t i = 0; i <= N; ++i)
            for (std::size_t k = 0; k <= i; ++k) r.a[i] += a[k] * o.a[i - k];
        return r;
    }
    Jet operator*(double c) const {
        Jet r;
        for (std::size_t i = 0; i <= N; ++i) r.a[i] = a[i] * c;
        return r;
    }
    /// Power-series division; denominator constant term must not vanish.
    Jet operator/(const Jet& o) const {
        Jet r;
        for (std::size_t i = 0; i <= N; ++i) {
            double s = a[i];
            for (std::size_t k = 1; k <= i; ++k) s -= o.a[k] * r.a[i - k];
            r.a[i] = s / o.a[0];
        }
        return r;
    }
};

/// exp of a jet by the standard recurrence e_n = (1/n) sum k v_k e_{n-k}.
template <std::size_t N>
Jet<N> exp(const Jet<N>& v) {
    Jet<N> e;
    e.a[0] = std::exp(v.a[0]);
    for (std::size_t n = 1; n <= N; ++n) {
        double s = 0.0;
        for (std::size_t k = 1; k <= n; ++k) s += static_cast<double>(k) * v.a[k] * e.a[n - k];
        e.a[n] = s / static_cast<double>(n);
    }
    return e;
}

/// Jet of 1/x at x0 != 0.
template <std::size_t N>
Jet<N> reciprocal_of_x(double x0) {
    Jet<N> r;
    double p = 1.0 / x0;
    r.a[0] = p;
    for (std::size_t n = 1; n <= N; ++n) {
        p *= -1.0 / x0;
        r.a[n] = p;
    }
    return r;
}

} // namespace czkit

#endif
