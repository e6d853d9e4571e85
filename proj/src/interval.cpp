#include "czkit/interval.hpp"

#include <algorithm>
#include <cmath>

namespace czkit {

double diam_union(const Interval& I, const Interval& J) {
    return std::max(I.right(), J.right()) - std::min(I.left(), J.left());
}

double rdist(const Interval& I, const Interval& J) {
    return diam_union(I, J) / std::max(I.length, J.length);
}

double ec(const Interval& I, const Interval& J) {
    return std::min(I.length, J.length) / std::max(I.length, J.length);
}

bool is_lagom(const Interval& I, int M) {
    if (M < 1) throw std::invalid_argument("is_lagom: M must be >= 1");
    const double lo = std::ldexp(1.0, -M);
    const double hi = std::ldexp(1.0, M);
    if (I.length < lo || I.length > hi) return false;
    return rdist(I, ball(hi)) <= static_cast<double>(M);
}

std::vector<DyadicInterval> LagomWindow::enumerate() const {
    std::vector<DyadicInterval> out;
    for (int j = j_min; j <= j_max; ++j) {
        const double scale = std::ldexp(1.0, j); // 1/|I|
        const auto k_lo = static_cast<std::int64_t>(std::ceil(-R * scale));
        const auto k_hi = static_cast<std::int64_t>(std::floor(R * scale)) - 1;
        for (std::int64_t k = k_lo; k <= k_hi; ++k) {
            out.emplace_back(j, k);
            if (out.size() > count_cap)
                throw std::length_error("LagomWindow: enumeration exceeds count cap");
        }
    }
    return out;
}

std::vector<DyadicInterval> enum_lagom(const LagomWindow& w) {
    std::vector<DyadicInterval> out;
    for (const auto& d : w.enumerate())
        if (is_lagom(d, w.M)) out.push_back(d);
    return out;
}

DyadicInterval smallest_dyadic_containing(const std::vector<double>& points, int j_finest) {
    if (points.empty())
        throw std::invalid_argument("smallest_dyadic_containing: empty point list");
    for (int j = j_finest; j >= -62; --j) {
        const double scale = std::ldexp(1.0, j);
        if (std::abs(points.front()) * scale >= 9.0e15)
            throw std::range_error("smallest_dyadic_containing: point beyond representable scale");
        const auto k0 = static_cast<std::int64_t>(std::floor(points.front() * scale));
        bool all = true;
        for (double p : points) {
            if (static_cast<std::int64_t>(std::floor(p * scale)) != k0) {
                all = false;
                break;
            }
        }
        if (all) return DyadicInterval(j, k0);
    }
    throw std::range_error("smallest_dyadic_containing: points span beyond representable scale");
}

} // namespace czkit
