#include "czkit/piecewise_poly.hpp"

#include <cmath>
#include <stdexcept>

#include "czkit/quadrature.hpp"

namespace czkit {

double PiecewisePoly::eval(double x, int n) const {
    const double s = (x - x0) / h;
    if (s < 0.0 || s >= pieces()) return 0.0;
    const int i = static_cast<int>(s);
    const double u = x - (x0 + i * h);
    const auto& c = coef[i];
    // Horner on the n-th derivative.
    double v = 0.0;
    for (int p = degree; p >= n; --p) {
        double fac = 1.0;
        for (int q = 0; q < n; ++q) fac *= static_cast<double>(p - q);
        v = v * u + c[p] * fac;
    }
    return v;
}

double PiecewisePoly::piece_integral(int i) const {
    const auto& c = coef[i];
    double s = 0.0, hp = h;
    for (int p = 0; p <= degree; ++p) {
        s += c[p] * hp / static_cast<double>(p + 1);
        hp *= h;
    }
    return s;
}

double PiecewisePoly::integral() const {
    double s = 0.0;
    for (int i = 0; i < pieces(); ++i) s += piece_integral(i);
    return s;
}

double PiecewisePoly::l2_norm() const {
    // Per-piece Gauss rule exact for degree 2*degree.
    const int n_gl = degree + 1;
    double s = 0.0;
    for (int i = 0; i < pieces(); ++i) {
        const double a = x0 + i * h;
        s += integrate_gl([this](double x) { const double v = eval(x, 0); return v * v; },
                          a, a + h, n_gl);
    }
    return std::sqrt(s);
}

PiecewisePoly PiecewisePoly::interpolate(const std::function<double(double)>& fn, double x0,
                                         double h, int n_pieces, int degree) {
    PiecewisePoly p;
    p.x0 = x0;
    p.h = h;
    p.degree = degree;
    p.coef.assign(n_pieces, std::vector<double>(degree + 1, 0.0));
    const int m = degree + 1;
    // Newton divided differences on equispaced interior nodes of each piece.
    std::vector<double> u(m), f(m);
    for (int i = 0; i < n_pieces; ++i) {
        const double a = x0 + i * h;
        for (int k = 0; k < m; ++k) {
            u[k] = h * (k + 0.5) / m;
            f[k] = fn(a + u[k]);
        }
        std::vector<double> dd = f;
        for (int lvl = 1; lvl < m; ++lvl)
            for (int k = m - 1; k >= lvl; --k)
                dd[k] = (dd[k] - dd[k - 1]) / (u[k] - u[k - lvl]);
        // Expand the Newton form into monomials in u:
        // c(u) <- c(u)*(u - u_k) + dd[k], from the top coefficient down.
        std::vector<double> c(m, 0.0);
        c[0] = dd[m - 1];
        for (int k = m - 2; k >= 0; --k) {
            for (int p = m - 1; p >= 1; --p) c[p] = c[p - 1] - u[k] * c[p];
            c[0] = -u[k] * c[0] + dd[k];
        }
        p.coef[i] = c;
    }
    return p;
}

double PiecewisePoly::pv_against_pole(double x) const {
    double s = 0.0;
    for (int i = 0; i < pieces(); ++i) {
        const double a = x0 + i * h;
        s += pv_poly_over_linear(coef[i], a, a + h, x);
    }
    return s;
}

double bspline(int m, double x) {
    if (m == 1) return (x >= 0.0 && x < 1.0) ? 1.0 : 0.0;
    if (x <= 0.0 || x >= m) return 0.0;
    return (x * bspline(m - 1, x) + (m - x) * bspline(m - 1, x - 1.0)) / (m - 1);
}

} // namespace czkit
