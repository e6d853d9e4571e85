#include "czkit/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "czkit/halton.hpp"
#include "czkit/sampled_function.hpp"

namespace czkit {

namespace {

void tuple_args(const CZKernel& K, double t, double x, double tp, double xp,
                double& l_arg, double& s_arg, double& d_arg) {
    const double r = std::abs(t - x);
    const double h = std::abs(t - tp) + std::abs(x - xp);
    const double sigma = std::abs(t + x);
    if (K.convention == TripleConvention::def22) {
        l_arg = r;
        s_arg = r;
        d_arg = sigma;
    } else {
        l_arg = r;
        s_arg = h;
        d_arg = 1.0 + sigma / (1.0 + r);
    }
}

} // namespace

double smoothness_ratio(const CZKernel& K, double t, double x, double tp, double xp) {
    const double r = std::abs(t - x);
    const double h = std::abs(t - tp) + std::abs(x - xp);
    if (!(2.0 * h < r))
        throw std::invalid_argument("smoothness_ratio: tuple outside the admissible region");
    if (h == 0.0) return 0.0;
    const double diff = std::abs(K.eval(t, x) - K.eval(tp, xp));
    return diff * std::pow(r, 1.0 + K.delta) / std::pow(h, K.delta);
}

std::vector<SampleTuple> sample_tuples(const SampleSpec& spec) {
    std::vector<SampleTuple> out;
    out.reserve(spec.count);
    const double lr_lo = std::log2(spec.r_lo), lr_hi = std::log2(spec.r_hi);
    const double lc_hi = std::log2(spec.center_max);
    double u[6];
    for (std::size_t i = 0; i < spec.count; ++i) {
        halton_point(i, 6, u);
        const double r = std::exp2(lr_lo + u[0] * (lr_hi - lr_lo));
        // centers log-spread over [2^-1, center_max], alternating sign
        const double c_mag = std::exp2(-1.0 + u[1] * (lc_hi + 1.0));
        const double c = (u[2] < 0.5) ? c_mag : -c_mag;
        const double t = c - 0.5 * r;
        const double x = c + 0.5 * r;
        // displacement h < r/2, split between the two coordinates
        const double h = 0.499 * r * std::pow(u[3], 1.5);
        const double ht = h * u[4];
        const double hx = h - ht;
        const double st = (u[5] < 0.5) ? 1.0 : -1.0;
        out.push_back({t, x, t + st * ht, x + st * hx});
    }
    return out;
}

KernelDiagnostics verify_compact_czk(const CZKernel& K, const SampleSpec& spec) {
    if (!K.triple) throw std::invalid_argument("verify_compact_czk: kernel carries no triple");
    KernelDiagnostics diag;
    const auto tuples = sample_tuples(spec);
    for (const auto& tu : tuples) {
        const double ratio = smoothness_ratio(K, tu.t, tu.x, tu.tp, tu.xp);
        if (!std::isfinite(ratio))
            throw std::runtime_error("verify_compact_czk: kernel evaluation not finite");
        double la, sa, da;
        tuple_args(K, tu.t, tu.x, tu.tp, tu.xp, la, sa, da);
        const double lsd = K.triple->product(la, sa, da);
        if (lsd > 0.0) {
            diag.fitted_constant = std::max(diag.fitted_constant, ratio / lsd);
            if (ratio > K.constant * 1.05 * lsd)
                diag.violations.push_back({tu, ratio, K.constant * lsd});
        } else if (ratio > 1e-12) {
            diag.violations.push_back({tu, ratio, 0.0});
        }
    }
    return diag;
}

EnvelopeCertificate decay_envelope(const CZKernel& K, double t, double x, double eps) {
    if (t == x) throw std::invalid_argument("decay_envelope: on-diagonal point");
    if (!(eps > 0.0 && eps < 1.0 / 3.0))
        throw std::invalid_argument("decay_envelope: eps must be in (0, 1/3)");
    if (!K.triple) throw std::invalid_argument("decay_envelope: kernel carries no triple");
    const double sigma = std::abs(t + x);
    double a = std::min(t, x), b = std::max(t, x);
    const double step = (1.0 - eps) / 4.0;
    double sum = 0.0, weight = 1.0;
    int k = 0;
    for (; k < 4000; ++k) {
        const double r = b - a;
        double fk;
        if (K.convention == TripleConvention::def22) {
            fk = K.triple->product(r, r, sigma);
        } else {
            const double h = 2.0 * step * r;
            fk = K.triple->product(r, h, 1.0 + sigma / (1.0 + r));
        }
        if (!std::isfinite(fk)) throw std::runtime_error("decay_envelope: non-finite term");
        sum += weight * fk;
        if (weight * std::max(fk, K.triple->bound) < 1e-14 * std::max(1.0, sum)) break;
        const double d = step * r;
        a -= d;
        b += d;
        weight *= 0.75; // (4/3)^{-k}
    }
    EnvelopeCertificate cert;
    cert.f_tilde = K.constant * sum;
    cert.kernel_side = std::abs(K.eval(t, x)) * std::abs(t - x);
    cert.margin = cert.f_tilde - cert.kernel_side;
    cert.terms = k + 1;
    return cert;
}

AdmissibleTriple fit_admissible(const CZKernel& K, const SampleSpec& spec) {
    const auto tuples = sample_tuples(spec);
    if (tuples.empty()) throw std::invalid_argument("fit_admissible: empty sample set");
    auto grid = admissible_grid();
    const std::size_t n = grid.size();
    std::vector<double> bl(n, 0.0), bs(n, 0.0), bd(n, 0.0);
    auto bucket = [&](double v) {
        auto it = std::upper_bound(grid.begin(), grid.end(), v);
        return it == grid.begin() ? std::size_t{0}
                                  : static_cast<std::size_t>(it - grid.begin()) - 1;
    };
    for (const auto& tu : tuples) {
        const double f = std::cbrt(smoothness_ratio(K, tu.t, tu.x, tu.tp, tu.xp));
        const double r = std::abs(tu.t - tu.x);
        const double h = std::abs(tu.t - tu.tp) + std::abs(tu.x - tu.xp);
        const double d = 1.0 + std::abs(tu.t + tu.x) / (1.0 + r);
        bl[bucket(r)] = std::max(bl[bucket(r)], f);
        bs[bucket(h)] = std::max(bs[bucket(h)], f);
        bd[bucket(d)] = std::max(bd[bucket(d)], f);
    }
    // L1, D1: suffix suprema (coordinate >= y); S1: prefix (coordinate <= y).
    auto ltab = std::make_shared<std::vector<double>>(bl);
    auto stab = std::make_shared<std::vector<double>>(bs);
    auto dtab = std::make_shared<std::vector<double>>(bd);
    for (std::size_t i = n - 1; i-- > 0;) {
        (*ltab)[i] = std::max((*ltab)[i], (*ltab)[i + 1]);
        (*dtab)[i] = std::max((*dtab)[i], (*dtab)[i + 1]);
    }
    for (std::size_t i = 1; i < n; ++i) (*stab)[i] = std::max((*stab)[i], (*stab)[i - 1]);
    auto gridp = std::make_shared<std::vector<double>>(grid);
    auto lookup_suffix = [gridp](const std::shared_ptr<std::vector<double>>& tab, double y) {
        auto it = std::lower_bound(gridp->begin(), gridp->end(), y);
        if (it == gridp->end()) return 0.0;
        std::size_t i = static_cast<std::size_t>(it - gridp->begin());
        if (i > 0 && *it > y) --i; // include the bucket containing y
        return (*tab)[i];
    };
    auto lookup_prefix = [gridp](const std::shared_ptr<std::vector<double>>& tab, double y) {
        auto it = std::upper_bound(gridp->begin(), gridp->end(), y);
        std::size_t i = it == gridp->begin() ? 0 : static_cast<std::size_t>(it - gridp->begin()) - 1;
        if (i + 1 < tab->size()) ++i; // conservative: include the partial bucket
        return (*tab)[i];
    };
    AdmissibleTriple out;
    out.L = [ltab, lookup_suffix](double y) { return lookup_suffix(ltab, y); };
    out.D = [dtab, lookup_suffix](double y) { return lookup_suffix(dtab, y); };
    out.S = [stab, lookup_prefix](double y) { return lookup_prefix(stab, y); };
    out.bound = std::max({(*ltab)[0], (*stab)[n - 1], (*dtab)[0]});
    out.mono_L = out.mono_S = out.mono_D = true;
    return out;
}

double regularity_profile(const CZKernel& K, double t, double x, double delta_p,
                          int n_offsets) {
    if (t == x) throw std::invalid_argument("regularity_profile: on-diagonal point");
    if (!(delta_p > 0.0 && delta_p < K.delta))
        throw std::invalid_argument("regularity_profile: need 0 < delta' < delta");
    const double r = std::abs(t - x);
    const double kv = K.eval(t, x);
    double best = 0.0;
    for (int i = 0; i < n_offsets; ++i) {
        // h log-spaced in [r*2^-20, r/2)
        const double h = r * std::exp2(-20.0 + 19.0 * (i + 0.5) / n_offsets);
        for (double s : {-1.0, 1.0}) {
            const double tp = t + s * h;
            const double v =
                std::pow(r, 1.0 + delta_p) / std::pow(h, delta_p) * std::abs(kv - K.eval(tp, x));
            best = std::max(best, v);
        }
    }
    return best;
}

CZKernel swapped_kernel(const CZKernel& K) {
    CZKernel s = K;
    s.name = K.name + ":swapped";
    s.eval = [e = K.eval](double t, double x) { return e(x, t); };
    if (K.symbol) {
        // K(x,t) = sigma(x,t)/(x-t) = -sigma(x,t)/(t-x)
        s.symbol = [f = K.symbol](double t, double x) { return -f(x, t); };
        s.symbol_dt = nullptr;
    }
    return s;
}

CZKernel builtin_kernel(const std::string& name) {
    CZKernel k;
    k.name = name;
    if (name == "zero") {
        k.eval = [](double, double) { return 0.0; };
        k.delta = 1.0;
        k.constant = 1.0;
        k.sclass = SingularityClass::bounded;
        k.symmetry = KernelSymmetry::symmetric;
        k.triple = builtin_triple("zero");
        return k;
    }
    if (name == "hilbert") {
        k.eval = [](double t, double x) { return 1.0 / (t - x); };
        k.delta = 1.0;
        k.constant = 2.0;
        k.sclass = SingularityClass::pv_odd;
        k.symbol = [](double, double) { return 1.0; };
        k.symbol_dt = [](double, double) { return 0.0; };
        k.symbol_is_constant = true;
        AdmissibleTriple flat;
        flat.L = flat.S = flat.D = [](double) { return 1.0; };
        flat.bound = 1.0;
        flat.mono_L = flat.mono_S = flat.mono_D = true;
        k.triple = flat;
        k.symmetry = KernelSymmetry::antisymmetric;
        return k;
    }
    if (name == "commutator_gauss") {
        // (b(t)-b(x))/(t-x) with b = exp(-x^2), written through expm1 so the
        // divided difference stays accurate near the diagonal.
        k.eval = [](double t, double x) {
            const double u = x - t;
            if (u == 0.0) return -2.0 * x * std::exp(-x * x); // b'(x)
            return -std::exp(-x * x) * std::expm1(u * (x + t)) / u;
        };
        k.delta = 1.0;
        k.constant = 512.0;
        k.sclass = SingularityClass::bounded;
        AdmissibleTriple t3;
        t3.L = [](double y) { return 1.0 / (1.0 + y); };
        t3.S = [](double y) { return y / (1.0 + y); };
        t3.D = [](double y) { return 1.0 / (1.0 + 0.25 * y); };
        t3.bound = 1.0;
        t3.mono_L = t3.mono_S = t3.mono_D = true;
        k.triple = t3;
        k.variation_scale = 0.5;
        k.symmetry = KernelSymmetry::symmetric;
        return k;
    }
    if (name == "damped_hilbert") {
        // eta(t+x) theta(t-x)/(t-x), eta = theta = Phi(./4).
        auto sym = [](double t, double x) {
            return cutoff_value((t + x) / 4.0, 0) * cutoff_value((t - x) / 4.0, 0);
        };
        k.eval = [sym](double t, double x) { return sym(t, x) / (t - x); };
        k.delta = 1.0;
        k.constant = 48.0;
        k.sclass = SingularityClass::pv_odd;
        k.symbol = sym;
        k.symbol_dt = [](double t, double x) {
            return cutoff_value((t + x) / 4.0, 1) * 0.25 * cutoff_value((t - x) / 4.0, 0) +
                   cutoff_value((t + x) / 4.0, 0) * cutoff_value((t - x) / 4.0, 1) * 0.25;
        };
        AdmissibleTriple t3;
        t3.L = [](double y) { return cutoff_value(y / 8.0, 0); };
        t3.S = [](double) { return 1.0; };
        t3.D = [](double y) { return cutoff_value(y / 8.0, 0); };
        t3.bound = 1.0;
        t3.mono_L = t3.mono_S = t3.mono_D = true;
        k.triple = t3;
        k.symmetry = KernelSymmetry::antisymmetric;
        return k;
    }
    throw std::invalid_argument("builtin_kernel: unknown kernel '" + name + "'");
}

} // namespace czkit
