#ifndef CZKIT_INTERVAL_HPP
#define CZKIT_INTERVAL_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace czkit {

/// Closed interval on the real line, stored as (center, length).
struct Interval {
    double center = 0.0;
    double length = 1.0;

    Interval() = default;
    Interval(double c, double len) : center(c), length(len) {
        if (!(len > 0.0)) throw std::invalid_argument("Interval: length must be > 0");
    }

    static Interval from_endpoints(double a, double b) {
        return Interval(0.5 * (a + b), b - a);
    }

    double left() const { return center - 0.5 * length; }
    double right() const { return center + 0.5 * length; }
    bool contains(double x) const { return x >= left() && x <= right(); }
    bool contains(const Interval& other) const {
        return other.left() >= left() && other.right() <= right();
    }

    Interval dilated(double lambda) const { return Interval(center, lambda * length); }
    Interval translated(double a) const { return Interval(center + a, length); }
};

/// The centered ball B_lambda = [-lambda/2, lambda/2].
inline Interval ball(double lambda) { return Interval(0.0, lambda); }

/// |<I,J>|: length of the smallest interval containing I and J.
double diam_union(const Interval& I, const Interval& J);

/// diam(I u J) / max(|I|,|J|).  Always >= 1, symmetric.
double rdist(const Interval& I, const Interval& J);

/// min(|I|,|J|) / max(|I|,|J|)  in (0,1].
double ec(const Interval& I, const Interval& J);

/// Dyadic interval 2^{-j}[k, k+1].  Larger j means finer scale.
struct DyadicInterval {
    int j = 0;
    std::int64_t k = 0;

    DyadicInterval() = default;
    DyadicInterval(int j_, std::int64_t k_) : j(j_), k(k_) {}

    double length() const { return std::ldexp(1.0, -j); }
    double left() const { return std::ldexp(static_cast<double>(k), -j); }
    double center() const { return std::ldexp(static_cast<double>(k) + 0.5, -j); }

    Interval to_interval() const { return Interval(center(), length()); }

    bool operator==(const DyadicInterval& o) const { return j == o.j && k == o.k; }
    bool operator<(const DyadicInterval& o) const {
        return j != o.j ? j < o.j : k < o.k;
    }
};

/// true iff 2^{-M} <= |I| <= 2^M and rdist(I, B_{2^M}) <= M.
bool is_lagom(const Interval& I, int M);
inline bool is_lagom(const DyadicInterval& I, int M) { return is_lagom(I.to_interval(), M); }

/// Finite enumeration window for dyadic intervals: scales j in
/// [j_min, j_max] (|I| = 2^{-j}), intervals contained in [-R, R].
struct LagomWindow {
    int M = 2;
    double R = 8.0;
    int j_min = -3;
    int j_max = 3;
    std::size_t count_cap = 1u << 20;

    LagomWindow() = default;
    LagomWindow(int M_, double R_, int jmin, int jmax)
        : M(M_), R(R_), j_min(jmin), j_max(jmax) {
        if (M < 1) throw std::invalid_argument("LagomWindow: M must be >= 1");
        if (j_min > j_max) throw std::invalid_argument("LagomWindow: j_min > j_max");
    }

    /// All dyadic intervals in the window, sorted by (j,k).
    std::vector<DyadicInterval> enumerate() const;
};

/// Dyadic intervals of the window that belong to D_M, sorted by (j,k).
std::vector<DyadicInterval> enum_lagom(const LagomWindow& w);

/// Minimal-length dyadic interval of scale at most j_finest (length >=
/// 2^{-j_finest}) containing all the points.  Half-open grid convention
/// [2^{-j}k, 2^{-j}(k+1)) resolves boundary ties.
DyadicInterval smallest_dyadic_containing(const std::vector<double>& points, int j_finest);

} // namespace czkit

#endif
