#ifndef CZKIT_QUADRATURE_HPP
#define CZKIT_QUADRATURE_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace czkit {

/// Gauss-Legendre rule on [-1,1], nodes computed by Newton iteration.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussRule& gauss_rule(int n);

/// Nodes and weights of a composite rule: per-panel Gauss-Legendre.
struct PanelQuadrature {
    std::vector<double> nodes;
    std::vector<double> weights;

    void add_panel(double a, double b, int n_gl);
    /// Panels [edges[i], edges[i+1]] with n_gl points each.
    void add_panels(const std::vector<double>& edges, int n_gl);

    template <class F>
    double integrate(F&& f) const {
        double s = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
        return s;
    }
};

double integrate_gl(const std::function<double(double)>& f, double a, double b, int n_gl);

/// Composite integration with panels of width at most h.
double integrate_cells(const std::function<double(double)>& f, double a, double b,
                       double h, int n_gl);

/// Geometrically graded panel edges from |x| = inner out to |x| = outer,
/// one-sided: {inner, inner*ratio, ...} clipped at outer.
std::vector<double> graded_edges(double inner, double outer, double ratio);

/// pv integral of P(t)/(t - x) over [a,b] for a polynomial P given by
/// monomial coefficients in the local variable u = t - a.  Exact in closed
/// form; valid for x inside or outside the panel (principal value sense).
double pv_poly_over_linear(const std::vector<double>& coef_local, double a, double b, double x);

} // namespace czkit

#endif
