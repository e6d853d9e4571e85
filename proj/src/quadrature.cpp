#include "czkit/quadrature.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace czkit {

namespace {

GaussRule compute_rule(int n) {
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // Newton iteration from the Chebyshev initial guess.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double p0 = 0, p1 = 0;
        for (int it = 0; it < 100; ++it) {
            p0 = 1.0;
            p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        p0 = 1.0;
        p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1.0);
        r.nodes[n - 1 - i] = x;
        r.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

} // namespace

const GaussRule& gauss_rule(int n) {
    static std::mutex mu;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
    return it->second;
}

void PanelQuadrature::add_panel(double a, double b, int n_gl) {
    if (!(b > a)) return;
    const auto& r = gauss_rule(n_gl);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < n_gl; ++i) {
        nodes.push_back(mid + half * r.nodes[i]);
        weights.push_back(half * r.weights[i]);
    }
}

void PanelQuadrature::add_panels(const std::vector<double>& edges, int n_gl) {
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) add_panel(edges[i], edges[i + 1], n_gl);
}

double integrate_gl(const std::function<double(double)>& f, double a, double b, int n_gl) {
    PanelQuadrature q;
    q.add_panel(a, b, n_gl);
    return q.integrate(f);
}

double integrate_cells(const std::function<double(double)>& f, double a, double b,
                       double h, int n_gl) {
    if (!(b > a)) return 0.0;
    const int n = std::max(1, static_cast<int>(std::ceil((b - a) / h)));
    PanelQuadrature q;
    const double step = (b - a) / n;
    for (int i = 0; i < n; ++i) q.add_panel(a + i * step, a + (i + 1) * step, n_gl);
    return q.integrate(f);
}

std::vector<double> graded_edges(double inner, double outer, double ratio) {
    if (!(inner > 0) || !(ratio > 1) || !(outer > inner))
        throw std::invalid_argument("graded_edges: need 0 < inner < outer, ratio > 1");
    std::vector<double> e{inner};
    double x = inner;
    while (x * ratio < outer) {
        x *= ratio;
        e.push_back(x);
    }
    e.push_back(outer);
    return e;
}

double pv_poly_over_linear(const std::vector<double>& coef_local, double a, double b, double x) {
    const double d = x - a;
    const std::size_t deg = coef_local.empty() ? 0 : coef_local.size() - 1;
    // Re-expand P around x: p_k = sum_{m>=k} c_m binom(m,k) d^{m-k}.
    std::vector<double> p(deg + 1, 0.0);
    for (std::size_t m = 0; m <= deg; ++m) {
        double binom = 1.0, dp = 1.0;
        for (std::size_t k = 0; k <= m; ++k) {
            p[m - k] += coef_local[m] * binom * dp;
            binom *= static_cast<double>(m - k) / static_cast<double>(k + 1);
            dp *= d;
        }
    }
    const double wb = b - x, wa = a - x;
    double s = p[0] * std::log(std::abs(wb / wa));
    double pb = wb, pa = wa;
    for (std::size_t k = 1; k <= deg; ++k) {
        s += p[k] * (pb - pa) / static_cast<double>(k);
        pb *= wb;
        pa *= wa;
    }
    return s;
}

} // namespace czkit
