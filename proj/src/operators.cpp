#include "czkit/operators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "czkit/cache.hpp"
#include "czkit/parallel.hpp"
#include "czkit/quadrature.hpp"

namespace czkit {

namespace {

constexpr int kGridGL = 6;

// Per-scale quadrature grid: panels of width h on the lattice h*Z covering
// the union of wavelet supports at that scale.  Panels align with every
// wavelet knot of scales <= j, so spline factors are integrated exactly.
struct ScaleGrid {
    int j = 0;
    double h = 1.0;
    std::int64_t p_lo = 0;
    int n_panels = 0;
    std::vector<double> nodes, weights;

    std::pair<int, int> node_range(double lo, double hi) const {
        auto a = static_cast<std::int64_t>(std::floor(lo / h)) - p_lo;
        auto b = static_cast<std::int64_t>(std::ceil(hi / h)) - p_lo;
        a = std::clamp<std::int64_t>(a, 0, n_panels);
        b = std::clamp<std::int64_t>(b, 0, n_panels);
        return {static_cast<int>(a) * kGridGL, static_cast<int>(b) * kGridGL};
    }
};

double grid_width(int j, double variation_scale) {
    const int vs_exp = std::max(0, static_cast<int>(std::ceil(-std::log2(variation_scale))));
    return std::ldexp(1.0, -std::max(j + 1, vs_exp));
}

ScaleGrid make_scale_grid(int j, double lo, double hi, double variation_scale) {
    ScaleGrid g;
    g.j = j;
    g.h = grid_width(j, variation_scale);
    g.p_lo = static_cast<std::int64_t>(std::floor(lo / g.h));
    const auto p_hi = static_cast<std::int64_t>(std::ceil(hi / g.h));
    g.n_panels = static_cast<int>(p_hi - g.p_lo);
    const auto& r = gauss_rule(kGridGL);
    g.nodes.reserve(g.n_panels * kGridGL);
    g.weights.reserve(g.n_panels * kGridGL);
    for (int p = 0; p < g.n_panels; ++p) {
        const double a = (g.p_lo + p) * g.h;
        const double mid = a + 0.5 * g.h, half = 0.5 * g.h;
        for (int i = 0; i < kGridGL; ++i) {
            g.nodes.push_back(mid + half * r.nodes[i]);
            g.weights.push_back(half * r.weights[i]);
        }
    }
    return g;
}

// sigma(t,x) evaluation helpers for pv kernels.
double pv_correction(const CZKernel& K, const WaveletBasis& basis, const DyadicInterval& U,
                     double x) {
    // integral of psi_U(t) (sigma(t,x) - sigma(x,x)) / (t - x) dt
    const Interval supp = basis.psi_support(U);
    const double s_xx = K.symbol(x, x);
    const double h = grid_width(U.j, K.variation_scale);
    auto integrand = [&](double t) {
        return basis.psi(U, t) * (K.symbol(t, x) - s_xx) / (t - x);
    };
    double acc = 0.0;
    const auto i_lo = static_cast<std::int64_t>(std::floor(supp.left() / h));
    const auto i_hi = static_cast<std::int64_t>(std::ceil(supp.right() / h));
    for (std::int64_t i = i_lo; i < i_hi; ++i) {
        const double a = i * h, b = a + h;
        if (x > a && x < b) {
            acc += integrate_gl(integrand, a, x, 8);
            acc += integrate_gl(integrand, x, b, 8);
        } else {
            acc += integrate_gl(integrand, a, b, 8);
        }
    }
    return acc;
}

double pv_apply_wavelet(const CZKernel& K, const WaveletBasis& basis, const DyadicInterval& U,
                        double x) {
    const double len = U.length();
    const double xi = (x - U.left()) / len;
    double v = K.symbol(x, x) * basis.mother.pv_against_pole(xi) / std::sqrt(len);
    if (!K.symbol_constant()) v += pv_correction(K, basis, U, x);
    return v;
}

double bounded_apply_wavelet(const CZKernel& K, const WaveletBasis& basis,
                             const DyadicInterval& U, double x) {
    const Interval supp = basis.psi_support(U);
    const double h = grid_width(U.j, K.variation_scale);
    auto integrand = [&](double t) { return basis.psi(U, t) * K.eval(t, x); };
    double acc = 0.0;
    const auto i_lo = static_cast<std::int64_t>(std::floor(supp.left() / h));
    const auto i_hi = static_cast<std::int64_t>(std::ceil(supp.right() / h));
    for (std::int64_t i = i_lo; i < i_hi; ++i) {
        const double a = i * h, b = a + h;
        if (x > a && x < b) {
            acc += integrate_gl(integrand, a, x, 8);
            acc += integrate_gl(integrand, x, b, 8);
        } else {
            acc += integrate_gl(integrand, a, b, 8);
        }
    }
    return acc;
}

} // namespace

std::size_t CoefficientMatrix::index_of(const DyadicInterval& I) const {
    auto it = std::lower_bound(intervals.begin(), intervals.end(), I);
    if (it == intervals.end() || !(*it == I))
        throw std::out_of_range("CoefficientMatrix: interval not in window");
    return static_cast<std::size_t>(it - intervals.begin());
}

double apply_to_wavelet(const CZKernel& K, const WaveletBasis& basis, const DyadicInterval& U,
                        double y) {
    if (K.sclass == SingularityClass::pv_odd) return pv_apply_wavelet(K, basis, U, y);
    return bounded_apply_wavelet(K, basis, U, y);
}

CoefficientMatrix assemble(const CZKernel& K, const WaveletBasis& basis,
                           const LagomWindow& window, const AssemblyOptions& opt) {
    CoefficientMatrix A;
    A.intervals = window.enumerate();
    A.kernel_id = K.name;
    A.spec_hash = assembly_spec_hash(K, basis, window);
    if (!opt.cache_dir.empty()) {
        if (auto cached = read_matrix_cache(matrix_cache_path(opt.cache_dir, A.spec_hash),
                                            A.spec_hash)) {
            return *cached;
        }
    }
    const std::size_t n = A.intervals.size();
    A.data.assign(n * n, 0.0);

    // Group window intervals by scale.
    std::map<int, std::vector<std::size_t>> by_scale;
    for (std::size_t i = 0; i < n; ++i) by_scale[A.intervals[i].j].push_back(i);

    // One grid per scale over the union of supports at that scale.
    std::map<int, ScaleGrid> grids;
    for (const auto& [j, idxs] : by_scale) {
        double lo = 1e300, hi = -1e300;
        for (auto i : idxs) {
            const Interval s = basis.psi_support(A.intervals[i]);
            lo = std::min(lo, s.left());
            hi = std::max(hi, s.right());
        }
        grids.emplace(j, make_scale_grid(j, lo, hi, K.variation_scale));
    }

    // Weighted psi_V node values per target scale, shared across sources.
    struct PairSide {
        int first_node = 0;
        std::vector<double> wpsi;
    };
    std::map<int, std::vector<PairSide>> pair_side;
    for (const auto& [j, idxs] : by_scale) {
        const ScaleGrid& g = grids.at(j);
        auto& sides = pair_side[j];
        sides.resize(idxs.size());
        parallel_for(idxs.size(), [&](std::size_t vi) {
            const DyadicInterval V = A.intervals[idxs[vi]];
            const Interval s = basis.psi_support(V);
            auto [n0, n1] = g.node_range(s.left(), s.right());
            sides[vi].first_node = n0;
            sides[vi].wpsi.resize(n1 - n0);
            for (int q = n0; q < n1; ++q)
                sides[vi].wpsi[q - n0] = g.weights[q] * basis.psi(V, g.nodes[q]);
        }, opt.threads);
    }

    const bool pv = K.sclass == SingularityClass::pv_odd;
    if (pv) {
        std::size_t overlap_count = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const Interval sa = basis.psi_support(A.intervals[a]);
                const Interval sb = basis.psi_support(A.intervals[b]);
                if (std::max(sa.left(), sb.left()) < std::min(sa.right(), sb.right()))
                    ++overlap_count;
            }
        A.pv_extension_entries = overlap_count;
    }

    // Process source scales from coarse to fine; the coarser member of every
    // pair supplies T psi (and its adjoint) sampled on the finer grid.
    for (const auto& [js, src_idxs] : by_scale) {
        // Concatenated target grids jt >= js.
        std::vector<int> targets;
        std::vector<int> offsets;
        int total_x = 0;
        for (const auto& [jt, g] : grids) {
            if (jt < js) continue;
            targets.push_back(jt);
            offsets.push_back(total_x);
            total_x += static_cast<int>(g.nodes.size());
        }
        // Flat view of all target nodes.
        std::vector<double> xnodes(total_x);
        for (std::size_t ti = 0; ti < targets.size(); ++ti) {
            const ScaleGrid& g = grids.at(targets[ti]);
            std::copy(g.nodes.begin(), g.nodes.end(), xnodes.begin() + offsets[ti]);
        }
        const std::size_t nw = src_idxs.size();
        std::vector<std::vector<double>> G(nw), Gs;
        for (auto& v : G) v.assign(total_x, 0.0);
        double adj_sign = 1.0;
        bool need_adjoint_pass = false;
        if (K.symmetry == KernelSymmetry::symmetric) {
            adj_sign = 1.0;
        } else if (K.symmetry == KernelSymmetry::antisymmetric) {
            adj_sign = -1.0;
        } else {
            need_adjoint_pass = true;
            Gs.resize(nw);
            for (auto& v : Gs) v.assign(total_x, 0.0);
        }

        if (pv) {
            const CZKernel Kswap = need_adjoint_pass ? swapped_kernel(K) : CZKernel{};
            parallel_for(nw, [&](std::size_t ui) {
                const DyadicInterval U = A.intervals[src_idxs[ui]];
                for (std::size_t ti = 0; ti < targets.size(); ++ti) {
                    const ScaleGrid& g = grids.at(targets[ti]);
                    const int off = offsets[ti];
                    for (std::size_t q = 0; q < g.nodes.size(); ++q) {
                        G[ui][off + q] = pv_apply_wavelet(K, basis, U, g.nodes[q]);
                        if (need_adjoint_pass)
                            Gs[ui][off + q] = pv_apply_wavelet(Kswap, basis, U, g.nodes[q]);
                    }
                }
            }, opt.threads);
        } else {
            // Shared kernel evaluations: tile the source t-grid, evaluate
            // K(t, x) once per node pair, scatter into every covering G_U.
            const ScaleGrid& tg = grids.at(js);
            const double len = A.intervals[src_idxs.front()].length();
            const double m_lo = basis.mother.left(), m_hi = basis.mother.right();
            const std::int64_t k_base = A.intervals[src_idxs.front()].k;
            const int passes = need_adjoint_pass ? 2 : 1;
            for (int pass = 0; pass < passes; ++pass) {
                auto& dst = pass == 0 ? G : Gs;
                const CZKernel* kp = &K;
                CZKernel kswap;
                if (pass == 1) {
                    kswap = swapped_kernel(K);
                    kp = &kswap;
                }
                const std::size_t tile = 512;
                for (std::size_t t0 = 0; t0 < tg.nodes.size(); t0 += tile) {
                    const std::size_t t1 = std::min(tg.nodes.size(), t0 + tile);
                    // Covering wavelets and their weighted values per t-node.
                    std::vector<std::vector<std::pair<int, double>>> cover(t1 - t0);
                    for (std::size_t q = t0; q < t1; ++q) {
                        const double t = tg.nodes[q];
                        // U covers t iff k in [t/len - m_hi, t/len - m_lo].
                        auto klo = static_cast<std::int64_t>(std::ceil(t / len - m_hi));
                        auto khi = static_cast<std::int64_t>(std::floor(t / len - m_lo));
                        klo = std::max(klo, k_base);
                        khi = std::min(khi, k_base + static_cast<std::int64_t>(nw) - 1);
                        for (std::int64_t kk = klo; kk <= khi; ++kk) {
                            const auto ui = static_cast<int>(kk - k_base);
                            const DyadicInterval U = A.intervals[src_idxs[ui]];
                            const double c = tg.weights[q] * basis.psi(U, t);
                            if (c != 0.0) cover[q - t0].push_back({ui, c});
                        }
                    }
                    const int n_chunks = effective_threads(opt.threads == 0 ? default_threads()
                                                                            : opt.threads) * 4;
                    const int chunk = (total_x + n_chunks - 1) / n_chunks;
                    parallel_for(static_cast<std::size_t>(n_chunks), [&](std::size_t ci) {
                        const int x0 = static_cast<int>(ci) * chunk;
                        const int x1 = std::min(total_x, x0 + chunk);
                        if (x0 >= x1) return;
                        for (std::size_t q = t0; q < t1; ++q) {
                            const double t = tg.nodes[q];
                            const auto& cv = cover[q - t0];
                            if (cv.empty()) continue;
                            for (int xi = x0; xi < x1; ++xi) {
                                const double kv = kp->eval(t, xnodes[xi]);
                                if (kv == 0.0) continue;
                                for (const auto& [ui, c] : cv) dst[ui][xi] += c * kv;
                            }
                        }
                    }, opt.threads);
                }
            }
        }

        // Pair the coarse side against every wavelet on finer-or-equal grids.
        parallel_for(nw, [&](std::size_t ui) {
            const std::size_t u_col = src_idxs[ui];
            for (std::size_t ti = 0; ti < targets.size(); ++ti) {
                const int jt = targets[ti];
                const int off = offsets[ti];
                const auto& vt = by_scale.at(jt);
                const auto& sides = pair_side.at(jt);
                for (std::size_t vi = 0; vi < vt.size(); ++vi) {
                    const std::size_t v_col = vt[vi];
                    const auto& side = sides[vi];
                    const double* gu = G[ui].data() + off + side.first_node;
                    double s = 0.0;
                    for (std::size_t q = 0; q < side.wpsi.size(); ++q) s += gu[q] * side.wpsi[q];
                    A.at(u_col, v_col) = s; // <T psi_U, psi_V>
                    if (jt > js) {
                        double sa = 0.0;
                        const double* ga =
                            (need_adjoint_pass ? Gs[ui].data() : G[ui].data()) + off +
                            side.first_node;
                        for (std::size_t q = 0; q < side.wpsi.size(); ++q)
                            sa += ga[q] * side.wpsi[q];
                        A.at(v_col, u_col) = adj_sign * sa; // <T psi_V, psi_U>
                    }
                }
            }
        }, opt.threads);
    }

    if (!opt.cache_dir.empty())
        write_matrix_cache(matrix_cache_path(opt.cache_dir, A.spec_hash), A);
    return A;
}

double dual_pair(const CZKernel& K, const WaveletBasis& basis, const DyadicInterval& I,
                 const DyadicInterval& J) {
    // Pair on the finer side's panels; apply T (or its adjoint) to the
    // coarser wavelet where it is smooth.
    const bool swap = I.j > J.j; // I finer: evaluate through the adjoint
    const DyadicInterval F = swap ? I : J;
    const DyadicInterval C = swap ? J : I;
    CZKernel Kc;
    const CZKernel* kp = &K;
    if (swap) {
        Kc = swapped_kernel(K);
        kp = &Kc;
    }
    const Interval sf = basis.psi_support(F);
    const double h = grid_width(F.j, K.variation_scale);
    const auto i_lo = static_cast<std::int64_t>(std::floor(sf.left() / h));
    const auto i_hi = static_cast<std::int64_t>(std::ceil(sf.right() / h));
    double acc = 0.0;
    for (std::int64_t i = i_lo; i < i_hi; ++i) {
        acc += integrate_gl(
            [&](double y) { return basis.psi(F, y) * apply_to_wavelet(*kp, basis, C, y); },
            i * h, (i + 1) * h, kGridGL);
    }
    return acc;
}

double op_norm(const CoefficientMatrix& A) {
    const std::size_t n = A.size();
    if (n == 0) return 0.0;
    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n))), w(n), u(n);
    double lambda = 0.0;
    for (int it = 0; it < 20000; ++it) {
        // w = A v (output side), u = A^T w
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            const double* row = A.data.data() + j * n;
            for (std::size_t i = 0; i < n; ++i) s += row[i] * v[i];
            w[j] = s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j) s += A.data[j * n + i] * w[j];
            u[i] = s;
        }
        double nu = 0.0, lam = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            nu += u[i] * u[i];
            lam += u[i] * v[i];
        }
        if (lam <= 0.0) return 0.0; // null action on the start vector
        const double change = std::abs(lam - lambda);
        lambda = lam;
        if (change <= 1e-8 * lambda && it > 2) break;
        const double inv = 1.0 / std::sqrt(nu);
        for (std::size_t i = 0; i < n; ++i) v[i] = u[i] * inv;
    }
    return std::sqrt(std::max(0.0, lambda));
}

double tail_norm(const CoefficientMatrix& A, int M) {
    if (M < 1) throw std::invalid_argument("tail_norm: M must be >= 1");
    CoefficientMatrix B;
    B.intervals = A.intervals;
    const std::size_t n = A.size();
    B.data.assign(n * n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        if (is_lagom(A.intervals[j], M)) continue; // P_M^perp kills lagom rows
        std::copy(A.data.begin() + j * n, A.data.begin() + (j + 1) * n, B.data.begin() + j * n);
    }
    return op_norm(B);
}

double apply_to_function(const CZKernel& K, const SampledFunction& f, double y) {
    if (!f.support) throw std::invalid_argument("apply_to_function: f needs compact support");
    const double lo = f.support->left(), hi = f.support->right();
    const double h = std::min(f.support->length / 32.0, K.variation_scale);
    if (K.sclass == SingularityClass::pv_odd) {
        // sigma(y,y) pv(1/(t-y)) + smooth remainder.
        const double syy = K.symbol(y, y);
        // folded pv: int_0^inf (f(y+s) - f(y-s))/s ds
        const double reach = std::max(std::abs(hi - y), std::abs(y - lo));
        double acc = 0.0;
        if (reach > 0.0) {
            acc = syy * integrate_cells(
                            [&](double s) { return (f.value(y + s) - f.value(y - s)) / s; },
                            0.0, reach, h, 8);
        }
        if (!K.symbol_constant()) {
            auto integrand = [&](double t) {
                return f.value(t) * (K.symbol(t, y) - syy) / (t - y);
            };
            if (y > lo && y < hi) {
                acc += integrate_cells(integrand, lo, y, h, 8);
                acc += integrate_cells(integrand, y, hi, h, 8);
            } else {
                acc += integrate_cells(integrand, lo, hi, h, 8);
            }
        }
        return acc;
    }
    auto integrand = [&](double t) { return f.value(t) * K.eval(t, y); };
    if (y > lo && y < hi) {
        return integrate_cells(integrand, lo, y, h, 8) + integrate_cells(integrand, y, hi, h, 8);
    }
    return integrate_cells(integrand, lo, hi, h, 8);
}

WeakCompactnessFit weak_compactness_scan(const CZKernel& K, const WaveletBasis& basis,
                                         const LagomWindow& window,
                                         const AdmissibleTriple& weak_triple, double eps) {
    WeakCompactnessFit fit;
    const auto ivs = window.enumerate();
    fit.table.resize(ivs.size());
    // L2-normalized plateau profile: plateau_norm = ||Phi||_2.
    const double phi_l2 = std::sqrt(integrate_cells(
        [](double x) {
            const double v = cutoff_value(x, 0);
            return v * v;
        },
        -2.0, 2.0, 0.125, 8));
    std::vector<double> resid(ivs.size(), 0.0);
    parallel_for(ivs.size(), [&](std::size_t i) {
        const DyadicInterval I = ivs[i];
        const Interval II = I.to_interval();
        auto phi = translate_dilate(cutoff_profile(), II.center, II.length, 2.0);
        // scale to unit L2 norm
        SampledFunction phin([phi, phi_l2](double x, int n) { return phi.eval(x, n) / phi_l2; },
                             phi.order, phi.support);
        // pair T(phi_I) against psi_I on the wavelet's panels
        const Interval sp = basis.psi_support(I);
        const double h = 0.5 * I.length();
        const auto a_lo = static_cast<std::int64_t>(std::floor(sp.left() / h));
        const auto a_hi = static_cast<std::int64_t>(std::ceil(sp.right() / h));
        double acc = 0.0;
        for (std::int64_t a = a_lo; a < a_hi; ++a) {
            acc += integrate_gl(
                [&](double x) { return basis.psi(I, x) * apply_to_function(K, phin, x); },
                a * h, (a + 1) * h, kGridGL);
        }
        resid[i] = std::abs(acc);
    });
    double c_wb = 0.0;
    for (std::size_t i = 0; i < ivs.size(); ++i) {
        fit.table[i] = {ivs[i], resid[i]};
        c_wb = std::max(c_wb, resid[i]);
    }
    fit.weak_constant = c_wb;
    FBound fb;
    fb.weak_triple = weak_triple;
    fit.M_fitted = 1;
    for (int M = 1; M <= 8; ++M) {
        bool ok = true;
        for (std::size_t i = 0; i < ivs.size(); ++i) {
            if (is_lagom(ivs[i], M)) continue;
            const double cap = c_wb * (f_w(fb, ivs[i].to_interval(), M) + eps);
            if (resid[i] > cap) {
                ok = false;
                break;
            }
        }
        if (ok) {
            fit.M_fitted = M;
            break;
        }
        fit.M_fitted = M + 1;
    }
    return fit;
}

Prop47Result prop47_bound_check(const CoefficientMatrix& A, const BoundParameters& params,
                                const FBound& fb, double eps) {
    Prop47Result res;
    const double dp = params.delta_prime();
    if (!(dp > 0.0))
        throw std::invalid_argument("prop47_bound_check: theta too large, delta' <= 0");
    const std::size_t n = A.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const Interval I = A.intervals[a].to_interval();
            const Interval J = A.intervals[b].to_interval();
            const double v = std::abs(A.at(a, b));
            if (v == 0.0) continue;
            const Interval& Kmax = (I.length >= J.length) ? I : J;
            const Interval& Kmin = (I.length >= J.length) ? J : I;
            const double diam = diam_union(I, J);
            const double l1 = diam / Kmax.length;
            const double l2 = std::pow(diam / Kmin.length, params.theta);
            const Interval K_tilde(Kmin.center, Kmax.length); // recentered translate
            std::vector<Interval> six = {
                I, J, Interval::from_endpoints(std::min(I.left(), J.left()),
                                               std::max(I.right(), J.right())),
                K_tilde.dilated(l1), K_tilde.dilated(l2), Kmin.dilated(l2)};
            const double F = f_joint(fb, six, fb.M);
            const double denom = std::pow(ec(I, J), 0.5 + dp) * (F + eps);
            const double ratio = v * std::pow(rdist(I, J), 1.0 + dp) / denom;
            if (ratio > res.constant) {
                res.constant = ratio;
                res.arg_I = A.intervals[a];
                res.arg_J = A.intervals[b];
            }
        }
    }
    return res;
}

double necessity_bound_check(const CZKernel& K, const WaveletBasis& basis,
                             const CoefficientMatrix& A, double p, int M, int N) {
    if (!(p > 1.0) || std::isinf(p))
        throw std::invalid_argument("necessity_bound_check: need 1 < p < infinity");
    const double alpha = std::abs(0.5 - 1.0 / p) + 0.5;
    LagomWindow w;
    // Rebuild the scan over the matrix window intervals.
    int jmin = A.intervals.front().j, jmax = A.intervals.back().j;
    double R = 0.0;
    for (const auto& I : A.intervals) R = std::max(R, std::abs(I.to_interval().right()));
    w.M = M;
    w.R = R;
    w.j_min = jmin;
    w.j_max = jmax;
    auto scan = weak_compactness_scan(K, basis, w, builtin_triple("power:1"), 1e-3);
    const double tail = tail_norm(A, M);
    const double two_m = std::ldexp(1.0, M);
    double c_fit = 0.0;
    for (const auto& [I, resid] : scan.table) {
        const Interval II = I.to_interval();
        const double shape = std::pow(1.0 + II.length / two_m, -alpha) *
                             std::pow(1.0 + 1.0 / (two_m * II.length), -alpha) *
                             std::pow(1.0 + rdist(II, ball(two_m)) / M, -N);
        const double excess = std::max(0.0, resid - tail);
        if (shape > 0.0) c_fit = std::max(c_fit, excess / shape);
    }
    return c_fit;
}

namespace {

double l1_norm(const SampledFunction& f, const Interval& I) {
    return integrate_cells([&](double x) { return std::abs(f.value(x)); }, I.left(), I.right(),
                           I.length / 64.0, 8);
}

} // namespace

T1Sample t1_functional(const CZKernel& K, const SampledFunction& f, const Interval& I, int k,
                       double a) {
    if (std::exp2(static_cast<double>(k)) < 1.0 + std::abs(a - I.center) / I.length)
        throw std::invalid_argument("t1_functional: 2^k too small for the translation offset");
    const double mass = integrate_cells([&](double x) { return f.value(x); }, I.left(),
                                        I.right(), I.length / 64.0, 8);
    const double norm1 = l1_norm(f, I);
    if (std::abs(mass) > 1e-8 * std::max(norm1, 1e-300))
        throw std::invalid_argument("t1_functional: f is not mean zero");

    const double lambda = std::exp2(static_cast<double>(k)) * I.length;
    const CZKernel Ks = swapped_kernel(K);
    auto h_f = [&](double t) { return apply_to_function(Ks, f, t); };

    // Folded about a: int_0^{2 lambda} Phi(s/lambda) (h_f(a+s) + h_f(a-s)) ds.
    std::vector<double> edges{0.0};
    const double fine_r = std::min(4.0 * I.length + std::abs(a - I.center), 2.0 * lambda);
    for (double e = 0.25 * I.length; e < fine_r; e += 0.25 * I.length) edges.push_back(e);
    edges.push_back(fine_r);
    if (fine_r < 2.0 * lambda) {
        for (double e : graded_edges(fine_r, 2.0 * lambda, 1.25)) edges.push_back(e);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    PanelQuadrature q;
    q.add_panels(edges, 8);
    const double value = q.integrate([&](double s) {
        const double cut = cutoff_value(s / lambda, 0);
        if (cut == 0.0) return 0.0;
        return cut * (h_f(a + s) + h_f(a - s));
    });

    // Error bound: C 2^{-k delta} sum_{k'} 2^{-delta k'} F_K(2^{k+k'} I) ||f||_1.
    double fsum = 0.0;
    if (K.triple) {
        double wgt = 1.0;
        for (int kp = 0; kp < 400; ++kp) {
            const Interval Ik(I.center, std::exp2(static_cast<double>(k + kp)) * I.length);
            FBound fb;
            fb.kernel_triple = *K.triple;
            const double term = wgt * f_k(fb, Ik);
            fsum += term;
            if (wgt * K.triple->bound < 1e-14 * std::max(1.0, fsum)) break;
            wgt *= std::exp2(-K.delta);
        }
    }
    T1Sample out;
    out.value = value;
    out.error_bound = K.constant * std::exp2(-K.delta * k) * fsum * norm1;
    return out;
}

double t1_limit(const CZKernel& K, const SampledFunction& f, const Interval& I, int k_limit) {
    return t1_functional(K, f, I, k_limit, I.center).value;
}

} // namespace czkit
