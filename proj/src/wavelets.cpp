#include "czkit/wavelets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "czkit/quadrature.hpp"

namespace czkit {

namespace {

double binom(int n, int k) {
    double b = 1.0;
    for (int i = 1; i <= k; ++i) b *= static_cast<double>(n - k + i) / i;
    return b;
}

// Chui-Wang coefficients: psi_m(x) = sum_n q_n N_m(2x - n), n = 0..3m-2.
std::vector<double> chui_wang_q(int m) {
    std::vector<double> q(3 * m - 1);
    for (int n = 0; n < 3 * m - 1; ++n) {
        double s = 0.0;
        for (int l = 0; l <= m; ++l) s += binom(m, l) * bspline(2 * m, n + 1 - l);
        q[n] = std::ldexp((n % 2 == 0 ? 1.0 : -1.0), 1 - m) * s;
    }
    return q;
}

PiecewisePoly chui_wang_poly(int m) {
    auto q = chui_wang_q(m);
    auto fn = [&](double x) {
        double v = 0.0;
        for (std::size_t n = 0; n < q.size(); ++n) v += q[n] * bspline(m, 2.0 * x - n);
        return v;
    };
    const int n_pieces = 2 * (2 * m - 1);
    return PiecewisePoly::interpolate(fn, 0.0, 0.5, n_pieces, m - 1);
}

// Shift Gram gamma(k) = <psi, psi(.-k)>: piecewise degree 2(m-1), exact GL.
std::vector<double> shift_gram(const PiecewisePoly& cw, int m) {
    std::vector<double> gam(2 * m - 1, 0.0);
    for (int k = 0; k <= 2 * m - 2; ++k) {
        double s = 0.0;
        for (int i = 0; i < cw.pieces(); ++i) {
            const double a = cw.x0 + i * cw.h;
            s += integrate_gl([&](double x) { return cw.eval(x, 0) * cw.eval(x - k, 0); },
                              a, a + cw.h, m);
        }
        gam[k] = s;
    }
    return gam;
}

// Fourier coefficients of gamma_hat(xi)^{-1/2} by the trapezoid rule.
std::vector<double> inv_sqrt_symbol_taps(const std::vector<double>& gam, int K) {
    const int N = 8192;
    std::vector<double> taps(K + 1, 0.0);
    for (int i = 0; i < N; ++i) {
        const double xi = 2.0 * M_PI * i / N;
        double sym = gam[0];
        for (std::size_t k = 1; k < gam.size(); ++k) sym += 2.0 * gam[k] * std::cos(k * xi);
        const double w = 1.0 / std::sqrt(sym);
        for (int k = 0; k <= K; ++k) taps[k] += w * std::cos(k * xi) / N;
    }
    return taps;
}

} // namespace

WaveletBasis build_spline_basis(int m, int K) {
    if (m < 2 || m > 4) throw std::invalid_argument("build_spline_basis: m must be 2, 3 or 4");
    if (K < 1) throw std::invalid_argument("build_spline_basis: K must be >= 1");
    PiecewisePoly cw = chui_wang_poly(m);
    auto gam = shift_gram(cw, m);
    auto taps = inv_sqrt_symbol_taps(gam, K);

    // mother = sum_{|k|<=K} c_k psi_cw(x - k), accumulated piece-wise.
    PiecewisePoly mother;
    mother.x0 = -static_cast<double>(K);
    mother.h = 0.5;
    mother.degree = m - 1;
    const int n_pieces = cw.pieces() + 4 * K;
    mother.coef.assign(n_pieces, std::vector<double>(m, 0.0));
    for (int k = -K; k <= K; ++k) {
        const double ck = taps[std::abs(k)];
        const int shift = 2 * (k + K); // pieces, since h = 1/2
        for (int i = 0; i < cw.pieces(); ++i)
            for (int p = 0; p < m; ++p) mother.coef[shift + i][p] += ck * cw.coef[i][p];
    }
    const double nrm = mother.l2_norm();
    for (auto& piece : mother.coef)
        for (auto& c : piece) c /= nrm;

    WaveletBasis b;
    b.mother = std::move(mother);
    b.spline_order = m;
    b.trunc_K = K;
    b.deriv_order = m - 1;
    return b;
}

double WaveletBasis::psi(const DyadicInterval& I, double x, int n) const {
    const double len = I.length();
    const double amp = std::pow(len, -0.5 - n);
    return amp * mother.eval((x - I.left()) / len, n);
}

Interval WaveletBasis::psi_support(const DyadicInterval& I) const {
    const double len = I.length();
    return Interval::from_endpoints(I.left() + mother.left() * len,
                                    I.left() + mother.right() * len);
}

SampledFunction WaveletBasis::psi_fn(const DyadicInterval& I) const {
    const PiecewisePoly* mp = &mother;
    const double len = I.length();
    const double l = I.left();
    return SampledFunction(
        [mp, len, l](double x, int n) {
            return std::pow(len, -0.5 - n) * mp->eval((x - l) / len, n);
        },
        deriv_order, psi_support(I));
}

SampledFunction WaveletBasis::companion() const {
    // integral of the cutoff profile is exactly 3 (plateau 2 plus two
    // symmetric smooth-step flanks of mass 1/2 each).
    auto phi = cutoff_profile();
    return SampledFunction([phi](double x, int n) { return phi.eval(x, n) / 3.0; },
                           phi.order, phi.support);
}

SampledFunction WaveletBasis::companion_on(const Interval& I) const {
    return translate_dilate(companion(), I.center, I.length, 1.0);
}

double WaveletBasis::inner_product(const DyadicInterval& I, const DyadicInterval& J) const {
    const DyadicInterval& F = (I.j >= J.j) ? I : J; // finer
    const DyadicInterval& C = (I.j >= J.j) ? J : I;
    const Interval sf = psi_support(F), sc = psi_support(C);
    const double lo = std::max(sf.left(), sc.left());
    const double hi = std::min(sf.right(), sc.right());
    if (!(hi > lo)) return 0.0;
    const double h = 0.5 * F.length(); // finer half-lattice
    const auto i_lo = static_cast<std::int64_t>(std::floor(lo / h));
    const auto i_hi = static_cast<std::int64_t>(std::ceil(hi / h));
    double s = 0.0;
    const int n_gl = spline_order; // exact for degree 2(m-1)
    for (std::int64_t i = i_lo; i < i_hi; ++i) {
        const double a = i * h, bnd = a + h;
        s += integrate_gl([&](double x) { return psi(F, x) * psi(C, x); }, a, bnd, n_gl);
    }
    return s;
}

CoefficientMap CoefficientMap::operator-(const CoefficientMap& o) const {
    CoefficientMap r = *this;
    for (const auto& [I, v] : o.c) r.c[I] -= v;
    return r;
}

double CoefficientMap::dot(const CoefficientMap& o) const {
    double s = 0.0;
    for (const auto& [I, v] : c) {
        auto it = o.c.find(I);
        if (it != o.c.end()) s += v * it->second;
    }
    return s;
}

double coeff(const WaveletBasis& basis, const SampledFunction& f, const DyadicInterval& I,
             double panel_h) {
    Interval s = basis.psi_support(I);
    double lo = s.left(), hi = s.right();
    if (f.support) {
        lo = std::max(lo, f.support->left());
        hi = std::min(hi, f.support->right());
    }
    if (!(hi > lo)) return 0.0;
    const double h = std::min(0.5 * I.length(), panel_h);
    const auto i_lo = static_cast<std::int64_t>(std::floor(lo / h));
    const auto i_hi = static_cast<std::int64_t>(std::ceil(hi / h));
    double acc = 0.0;
    for (std::int64_t i = i_lo; i < i_hi; ++i) {
        acc += integrate_gl([&](double x) { return f.value(x) * basis.psi(I, x); },
                            i * h, (i + 1) * h, 8);
    }
    return acc;
}

CoefficientMap analyze(const WaveletBasis& basis, const SampledFunction& f,
                       const LagomWindow& window, double panel_h) {
    CoefficientMap out;
    for (const auto& I : window.enumerate()) out.set(I, coeff(basis, f, I, panel_h));
    return out;
}

SampledFunction synthesize(const WaveletBasis& basis, const CoefficientMap& cmap) {
    if (cmap.c.empty())
        return SampledFunction([](double, int) { return 0.0; }, 8, Interval(0.0, 1.0));
    double lo = 1e300, hi = -1e300;
    for (const auto& [I, v] : cmap.c) {
        (void)v;
        const Interval s = basis.psi_support(I);
        lo = std::min(lo, s.left());
        hi = std::max(hi, s.right());
    }
    // Copy the map into a vector for cheap deterministic iteration.
    auto entries = std::make_shared<std::vector<std::pair<DyadicInterval, double>>>(
        cmap.c.begin(), cmap.c.end());
    const WaveletBasis* bp = &basis;
    return SampledFunction(
        [bp, entries](double x, int n) {
            double s = 0.0;
            for (const auto& [I, v] : *entries) s += v * bp->psi(I, x, n);
            return s;
        },
        basis.deriv_order, Interval::from_endpoints(lo, hi));
}

CoefficientMap project_lagom(const CoefficientMap& c, int M, bool complement) {
    if (M < 1) throw std::invalid_argument("project_lagom: M must be >= 1");
    CoefficientMap out;
    for (const auto& [I, v] : c.c)
        if (is_lagom(I, M) != complement) out.c.emplace(I, v);
    return out;
}

double gram_deviation(const WaveletBasis& basis, const LagomWindow& window) {
    const auto ivs = window.enumerate();
    double dev = 0.0;
    for (std::size_t a = 0; a < ivs.size(); ++a) {
        for (std::size_t b = a; b < ivs.size(); ++b) {
            const double g = basis.inner_product(ivs[a], ivs[b]);
            const double target = (a == b) ? 1.0 : 0.0;
            dev = std::max(dev, std::abs(g - target));
        }
    }
    return dev;
}

double reconstruction_error(const WaveletBasis& basis, const SampledFunction& f,
                            const CoefficientMap& cmap, const LagomWindow& window) {
    const SampledFunction g = synthesize(basis, cmap);
    const double h = 0.5 * std::ldexp(1.0, -window.j_max);
    const double R = window.R;
    double acc = 0.0;
    const auto n = static_cast<std::int64_t>(std::llround(2.0 * R / h));
    for (std::int64_t i = 0; i < n; ++i) {
        const double a = -R + i * h;
        acc += integrate_gl(
            [&](double x) {
                const double d = f.value(x) - g.value(x);
                return d * d;
            },
            a, a + h, 8);
    }
    return std::sqrt(acc);
}

std::string serialize_coefficients(const CoefficientMap& cmap) {
    nlohmann::json arr = nlohmann::json::array();
    char buf[48];
    for (const auto& [I, v] : cmap.c) {
        std::snprintf(buf, sizeof buf, "%a", v);
        arr.push_back({{"j", I.j}, {"k", I.k}, {"value", std::string(buf)}});
    }
    return arr.dump();
}

CoefficientMap deserialize_coefficients(const std::string& json_text) {
    CoefficientMap out;
    auto arr = nlohmann::json::parse(json_text);
    for (const auto& rec : arr) {
        DyadicInterval I(rec.at("j").get<int>(), rec.at("k").get<std::int64_t>());
        const std::string hex = rec.at("value").get<std::string>();
        out.c[I] = std::strtod(hex.c_str(), nullptr);
    }
    return out;
}

} // namespace czkit
