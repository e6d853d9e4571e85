#include "czkit/admissible.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace czkit {

std::vector<double> admissible_grid() {
    std::vector<double> g;
    g.reserve(161);
    for (int j = -80; j <= 80; ++j) g.push_back(std::exp2(j / 4.0));
    return g;
}

namespace {

// Running suprema over the geometric grid, queried by bisection.
// 'from_right' selects sup over grid points >= x (for L and D),
// otherwise sup over grid points <= x (for S).
RealFn grid_sup(const RealFn& f, bool from_right) {
    auto grid = std::make_shared<std::vector<double>>(admissible_grid());
    auto table = std::make_shared<std::vector<double>>(grid->size());
    for (std::size_t i = 0; i < grid->size(); ++i) (*table)[i] = f((*grid)[i]);
    if (from_right) {
        for (std::size_t i = table->size() - 1; i-- > 0;)
            (*table)[i] = std::max((*table)[i], (*table)[i + 1]);
    } else {
        for (std::size_t i = 1; i < table->size(); ++i)
            (*table)[i] = std::max((*table)[i], (*table)[i - 1]);
    }
    return [f, grid, table, from_right](double x) {
        double v = f(x);
        if (from_right) {
            auto it = std::lower_bound(grid->begin(), grid->end(), x);
            if (it != grid->end())
                v = std::max(v, (*table)[static_cast<std::size_t>(it - grid->begin())]);
        } else {
            auto it = std::upper_bound(grid->begin(), grid->end(), x);
            if (it != grid->begin())
                v = std::max(v, (*table)[static_cast<std::size_t>(it - grid->begin()) - 1]);
        }
        return v;
    };
}

} // namespace

AdmissibleTriple regularize_monotone(const AdmissibleTriple& t) {
    AdmissibleTriple out;
    out.L = grid_sup(t.L, true);
    out.S = grid_sup(t.S, false);
    out.D = grid_sup(t.D, true);
    out.bound = t.bound;
    out.mono_L = out.mono_S = out.mono_D = true;
    return out;
}

AdmissibleTriple dilate_triple(const AdmissibleTriple& t, double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("dilate_triple: lambda must be > 0");
    AdmissibleTriple out = t;
    out.L = [f = t.L, lambda](double x) { return f(x / lambda); };
    out.S = [f = t.S, lambda](double x) { return f(x / lambda); };
    out.D = [f = t.D, lambda](double x) { return f(x / lambda); };
    return out;
}

bool check_limits(const AdmissibleTriple& t) {
    const double hi = std::exp2(20.0), lo = std::exp2(-20.0);
    const double tol = 0.05 * t.bound;
    return t.L(hi) < tol && t.S(lo) < tol && t.D(hi) < tol;
}

AdmissibleTriple builtin_triple(const std::string& spec) {
    AdmissibleTriple t;
    if (spec == "zero") {
        t.L = t.S = t.D = [](double) { return 0.0; };
        t.bound = 0.0;
        t.mono_L = t.mono_S = t.mono_D = true;
        return t;
    }
    if (spec == "exp") {
        t.L = [](double x) { return std::exp(-x); };
        t.S = [](double x) { return -std::expm1(-x); };
        t.D = [](double x) { return std::exp(-x); };
        t.bound = 1.0;
        t.mono_L = t.mono_S = t.mono_D = true;
        return t;
    }
    if (spec.rfind("power", 0) == 0) {
        double alpha = 1.0;
        if (auto pos = spec.find(':'); pos != std::string::npos)
            alpha = std::stod(spec.substr(pos + 1));
        if (!(alpha > 0.0)) throw std::invalid_argument("builtin_triple: power exponent must be > 0");
        t.L = [alpha](double x) { return std::pow(1.0 + x, -alpha); };
        t.S = [alpha](double x) { return x > 0.0 ? std::pow(1.0 + 1.0 / x, -alpha) : 0.0; };
        t.D = [](double x) { return 1.0 / (1.0 + x); };
        t.bound = 1.0;
        t.mono_L = t.mono_S = t.mono_D = true;
        return t;
    }
    throw std::invalid_argument("builtin_triple: unknown spec '" + spec + "'");
}

double f_k(const FBound& fb, const Interval& I) {
    const auto& t = fb.kernel_triple;
    return t.L(I.length) * t.S(I.length) * t.D(rdist(I, ball(1.0)));
}

double f_w(const FBound& fb, const Interval& I, int M) {
    if (M < 1) throw std::invalid_argument("f_w: M must be >= 1");
    const auto& t = fb.weak_triple;
    const double two_m = std::ldexp(1.0, M);
    return t.L(I.length / two_m) * t.S(I.length * two_m) *
           t.D(rdist(I, ball(two_m)) / static_cast<double>(M));
}

double f_single(const FBound& fb, const Interval& I, int M) {
    return f_k(fb, I) + f_w(fb, I, M);
}

double f_joint(const FBound& fb, const std::vector<Interval>& intervals, int M) {
    if (intervals.empty()) throw std::invalid_argument("f_joint: empty interval list");
    if (M < 1) throw std::invalid_argument("f_joint: M must be >= 1");
    const double two_m = std::ldexp(1.0, M);
    double lk = 0, sk = 0, dk = 0, lw = 0, sw = 0, dw = 0;
    for (const auto& I : intervals) {
        lk += fb.kernel_triple.L(I.length);
        sk += fb.kernel_triple.S(I.length);
        dk += fb.kernel_triple.D(rdist(I, ball(1.0)));
        lw += fb.weak_triple.L(I.length / two_m);
        sw += fb.weak_triple.S(I.length * two_m);
        dw += fb.weak_triple.D(rdist(I, ball(two_m)) / static_cast<double>(M));
    }
    return lk * sk * dk + lw * sw * dw;
}

} // namespace czkit
