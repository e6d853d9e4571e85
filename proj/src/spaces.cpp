#include "czkit/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "czkit/bumps.hpp"
#include "czkit/operators.hpp"
#include "czkit/parallel.hpp"
#include "czkit/quadrature.hpp"

namespace czkit {

namespace {

bool dyadic_subset(const DyadicInterval& I, const DyadicInterval& Om) {
    if (I.j < Om.j) return false; // I coarser than Omega
    const std::int64_t shift = I.j - Om.j;
    return (I.k >> shift) == Om.k;
}

double carleson_sup(const CoefficientMap& c, const LagomWindow& window,
                    const std::function<bool(const DyadicInterval&)>& keep) {
    double best = 0.0;
    for (const auto& Om : window.enumerate()) {
        double s = 0.0;
        for (const auto& [I, v] : c.c)
            if (keep(I) && dyadic_subset(I, Om)) s += v * v;
        best = std::max(best, std::sqrt(s / Om.length()));
    }
    return best;
}

} // namespace

double bmo_wavelet_norm(const CoefficientMap& c, const LagomWindow& window) {
    return carleson_sup(c, window, [](const DyadicInterval&) { return true; });
}

double cmo_modulus(const CoefficientMap& c, int M, const LagomWindow& window) {
    if (M < 1) throw std::invalid_argument("cmo_modulus: M must be >= 1");
    return carleson_sup(c, window, [M](const DyadicInterval& I) { return !is_lagom(I, M); });
}

AtomH1 make_atom(const Interval& I, std::uint64_t shape_seed, double p) {
    if (!(p > 1.0) || std::isinf(p))
        throw std::invalid_argument("make_atom: need 1 < p < infinity");
    // Base bump of width |I|/8 centered so that 4*base fits inside I.
    const Interval core(I.center, I.length / 8.0);
    auto base = cutoff_on(core);
    SampledFunction shape;
    switch (shape_seed % 3) {
        case 0: // derivative of a bump
            shape = SampledFunction([base](double x, int n) { return base.eval(x, n + 1); },
                                    base.order - 1, base.support);
            break;
        case 1: { // odd moment shape (x - c) * bump
            const double c = I.center;
            shape = product(SampledFunction(
                                [c](double x, int n) {
                                    if (n == 0) return x - c;
                                    return n == 1 ? 1.0 : 0.0;
                                },
                                8, std::nullopt),
                            base);
            break;
        }
        default: // second derivative of a bump
            shape = SampledFunction([base](double x, int n) { return base.eval(x, n + 2); },
                                    base.order - 2, base.support);
            break;
    }
    const double pp = p / (p - 1.0);
    const double h = I.length / 512.0;
    const double norm_pp = std::pow(
        integrate_cells([&](double x) { return std::pow(std::abs(shape.value(x)), pp); },
                        I.left(), I.right(), h, 8),
        1.0 / pp);
    const double target = std::pow(I.length, -1.0 / p);
    const double amp = target / norm_pp;
    AtomH1 atom;
    atom.support = I;
    atom.p = p;
    atom.profile = SampledFunction(
        [shape, amp](double x, int n) { return amp * shape.eval(x, n); }, shape.order,
        shape.support);
    return atom;
}

CoefficientMap t1_coefficients(const CZKernel& K, const WaveletBasis& basis,
                               const LagomWindow& window, int k_limit) {
    CoefficientMap out;
    const auto ivs = window.enumerate();
    std::vector<double> vals(ivs.size());
    parallel_for(ivs.size(), [&](std::size_t i) {
        const auto psi = basis.psi_fn(ivs[i]);
        const Interval supp = basis.psi_support(ivs[i]);
        vals[i] = t1_limit(K, psi, supp, k_limit);
    });
    for (std::size_t i = 0; i < ivs.size(); ++i) out.set(ivs[i], vals[i]);
    return out;
}

std::vector<double> t1_in_cmo_test(const CZKernel& K, const WaveletBasis& basis,
                                   const std::vector<AtomH1>& atoms,
                                   const LagomWindow& window, const std::vector<int>& m_range) {
    const CoefficientMap t1c = t1_coefficients(K, basis, window);
    // Atom coefficients once; the panel width resolves the finest scale.
    const double panel = 0.25 * std::ldexp(1.0, -window.j_max);
    std::vector<CoefficientMap> acs(atoms.size());
    parallel_for(atoms.size(), [&](std::size_t a) {
        acs[a] = analyze(basis, atoms[a].profile, window, panel);
    });
    std::vector<double> table;
    table.reserve(m_range.size());
    for (int M : m_range) {
        double sup = 0.0;
        const CoefficientMap tail = project_lagom(t1c, M, true);
        for (const auto& ac : acs) sup = std::max(sup, std::abs(tail.dot(ac)));
        table.push_back(sup);
    }
    return table;
}

} // namespace czkit
