#include "czkit/paraproduct.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "czkit/bumps.hpp"
#include "czkit/halton.hpp"
#include "czkit/parallel.hpp"
#include "czkit/quadrature.hpp"
#include "czkit/spaces.hpp"

namespace czkit {

Paraproduct make_paraproduct(const WaveletBasis& basis, const LagomWindow& window,
                             const CoefficientMap& b_coeff) {
    Paraproduct P;
    P.basis = &basis;
    P.window = window;
    P.b_coeff = b_coeff;
    return P;
}

Paraproduct make_paraproduct(const WaveletBasis& basis, const LagomWindow& window,
                             const SampledFunction& b, double panel_h) {
    return make_paraproduct(basis, window, analyze(basis, b, window, panel_h));
}

SampledFunction builtin_symbol(const std::string& spec, const WaveletBasis& basis) {
    if (spec == "gauss_cos") {
        return SampledFunction(
            [](double x, int n) {
                // e^{-x^2} cos(3x), derivatives to order 2 in closed form
                const double g = std::exp(-x * x);
                const double c = std::cos(3.0 * x), s = std::sin(3.0 * x);
                switch (n) {
                    case 0: return g * c;
                    case 1: return g * (-2.0 * x * c - 3.0 * s);
                    case 2:
                        return g * ((4.0 * x * x - 2.0 - 9.0) * c + 12.0 * x * s);
                    default: throw std::invalid_argument("gauss_cos: derivative order");
                }
            },
            2, Interval(0.0, 40.0));
    }
    if (spec == "bump") return cutoff_on(Interval(0.0, 1.0));
    if (spec.rfind("single_wavelet:", 0) == 0) {
        const auto rest = spec.substr(15);
        const auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("builtin_symbol: single_wavelet needs j,k");
        const int j = std::stoi(rest.substr(0, comma));
        const auto k = static_cast<std::int64_t>(std::stoll(rest.substr(comma + 1)));
        return basis.psi_fn(DyadicInterval(j, k));
    }
    throw std::invalid_argument("builtin_symbol: unknown spec '" + spec + "'");
}

PairValue pair(const Paraproduct& P, const SampledFunction& f, const SampledFunction& g,
               double panel_h) {
    PairValue out{0.0, 0.0};
    for (const auto& [I, beta] : P.b_coeff.c) {
        if (beta == 0.0) continue;
        const Interval II = I.to_interval();
        const auto phi_I = P.basis->companion_on(II);
        const double ff = pair_integral(f, phi_I, std::min(panel_h, 0.5 * II.length),
                                        0.5 * II.length);
        const double gg = coeff(*P.basis, g, I, panel_h);
        const double term = beta * ff * gg;
        out.value += term;
        // boundary-scale terms report as the truncation residual proxy
        if (I.j == P.window.j_min || I.j == P.window.j_max)
            out.truncation_residual += std::abs(term);
    }
    return out;
}

double kernel_eval(const Paraproduct& P, double t, double x) {
    if (std::abs(t - x) < P.kernel_floor())
        throw std::invalid_argument("kernel_eval: |t-x| below the window floor");
    double s = 0.0;
    for (const auto& [I, beta] : P.b_coeff.c) {
        if (beta == 0.0) continue;
        const Interval II = I.to_interval();
        const double phi_t = P.basis->companion_on(II).value(t);
        if (phi_t == 0.0) continue;
        const double psi_x = P.basis->psi(I, x);
        if (psi_x == 0.0) continue;
        s += beta * phi_t * psi_x;
    }
    return s;
}

CZKernel as_kernel(const Paraproduct& P) {
    CZKernel k;
    k.name = "paraproduct";
    const Paraproduct* pp = &P;
    k.eval = [pp](double t, double x) { return kernel_eval(*pp, t, x); };
    k.delta = 1.0;
    k.constant = 8.0;
    k.sclass = SingularityClass::bounded;
    k.symmetry = KernelSymmetry::none;
    k.variation_scale = std::ldexp(1.0, -(P.window.j_max + 1));
    AdmissibleTriple t3 = builtin_triple("power:1");
    k.triple = t3;
    return k;
}

SmoothnessReport kernel_smoothness_check(const Paraproduct& P, int M, std::size_t n_samples) {
    SmoothnessReport rep;
    const CoefficientMap tail = project_lagom(P.b_coeff, M, true);
    const double bmo_tail = bmo_wavelet_norm(tail, P.window);
    const double denom = bmo_tail + std::ldexp(1.0, -M);
    const double floor = P.kernel_floor();
    const double two_m = std::ldexp(1.0, M);
    double u[4];
    double worst = 0.0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < n_samples; ++i) {
        halton_point(i, 4, u);
        double t, x;
        switch (i % 3) {
            case 0: { // |t-x| > 2^M
                const double r = two_m * (1.0 + 3.0 * u[0]);
                const double c = 8.0 * (2.0 * u[1] - 1.0);
                t = c + 0.5 * r;
                x = c - 0.5 * r;
                break;
            }
            case 1: { // |t+x| > M 2^{M+1}
                const double c = M * two_m * (1.0 + u[0]);
                const double r = 0.5 + 3.0 * u[1];
                t = c + 0.5 * r;
                x = c - 0.5 * r;
                break;
            }
            default: { // |t-x| small
                const double r = std::max(4.0 * floor, std::exp2(-1.5 * M) * (0.25 + 0.5 * u[0]));
                const double c = 2.0 * (2.0 * u[1] - 1.0);
                t = c + 0.5 * r;
                x = c - 0.5 * r;
            }
        }
        const double r = std::abs(t - x);
        const double h = 0.25 * r * (0.2 + 0.8 * u[2]);
        const double tp = t + ((u[3] < 0.5) ? h : -h);
        if (std::abs(tp - x) < floor || r < 2.0 * floor) continue;
        const double q = std::abs(kernel_eval(P, t, x) - kernel_eval(P, tp, x)) * r * r / h;
        worst = std::max(worst, q);
        ++used;
    }
    rep.max_quotient = worst;
    rep.samples = used;
    rep.fitted_constant = denom > 0.0 ? worst / denom : 0.0;
    return rep;
}

CoefficientMatrix paraproduct_matrix(const Paraproduct& P) {
    CoefficientMatrix A;
    A.intervals = P.window.enumerate();
    A.kernel_id = "paraproduct";
    const std::size_t n = A.intervals.size();
    A.data.assign(n * n, 0.0);
    // G_phi[ip][i] = <psi_I, phi_{I'}>, G_psi[ip][jdx] = <psi_J, psi_{I'}>.
    std::vector<double> beta(n, 0.0);
    for (std::size_t ip = 0; ip < n; ++ip) beta[ip] = P.b_coeff.get(A.intervals[ip]);
    std::vector<std::vector<double>> gphi(n), gpsi(n);
    const double panel = 0.25 * std::ldexp(1.0, -P.window.j_max);
    parallel_for(n, [&](std::size_t ip) {
        gphi[ip].assign(n, 0.0);
        gpsi[ip].assign(n, 0.0);
        if (beta[ip] == 0.0) return;
        const Interval II = A.intervals[ip].to_interval();
        const auto phi_ip = P.basis->companion_on(II);
        for (std::size_t i = 0; i < n; ++i) {
            const auto psi_i = P.basis->psi_fn(A.intervals[i]);
            gphi[ip][i] =
                pair_integral(psi_i, phi_ip, std::min(panel * 2.0, II.length * 0.5), II.length);
            gpsi[ip][i] = P.basis->inner_product(A.intervals[i], A.intervals[ip]);
        }
    });
    parallel_for(n, [&](std::size_t jdx) {
        for (std::size_t idx = 0; idx < n; ++idx) {
            double s = 0.0;
            for (std::size_t ip = 0; ip < n; ++ip) {
                if (beta[ip] == 0.0) continue;
                s += beta[ip] * gphi[ip][idx] * gpsi[ip][jdx];
            }
            A.at(idx, jdx) = s;
        }
    });
    return A;
}

ParaproductCompactness paraproduct_compactness(const Paraproduct& P,
                                               const std::vector<int>& m_range) {
    ParaproductCompactness out;
    const CoefficientMatrix A = paraproduct_matrix(P);
    for (int M : m_range) {
        out.tail_norms.push_back(tail_norm(A, M));
        out.pm_perp_b_bmo.push_back(bmo_wavelet_norm(project_lagom(P.b_coeff, M, true), P.window));
    }
    for (std::size_t i = 0; i < m_range.size(); ++i) {
        if (out.pm_perp_b_bmo[i] > 0.0)
            out.fitted_constant =
                std::max(out.fitted_constant, out.tail_norms[i] / out.pm_perp_b_bmo[i]);
    }
    return out;
}

} // namespace czkit
