#ifndef CZKIT_PIECEWISE_POLY_HPP
#define CZKIT_PIECEWISE_POLY_HPP

#include <functional>
#include <vector>

namespace czkit {

/// Piecewise polynomial on a uniform knot grid x0 + i*h, i = 0..n_pieces.
/// Piece i holds monomial coefficients in the local variable u = x - knot_i.
/// Exact evaluation, derivatives, and integrals; zero outside the grid.
struct PiecewisePoly {
    double x0 = 0.0;
    double h = 1.0;
    int degree = 0;
    std::vector<std::vector<double>> coef; // [piece][power]

    int pieces() const { return static_cast<int>(coef.size()); }
    double left() const { return x0; }
    double right() const { return x0 + h * pieces(); }

    double operator()(double x) const { return eval(x, 0); }
    double eval(double x, int n) const;

    /// Exact integral of the n-th piece over its own span.
    double piece_integral(int i) const;
    /// Exact integral over the whole support.
    double integral() const;
    /// Exact L2 norm (sqrt of integral of square).
    double l2_norm() const;

    /// Build by local interpolation of fn, which must be polynomial of the
    /// given degree on every piece (exact reconstruction).
    static PiecewisePoly interpolate(const std::function<double(double)>& fn, double x0,
                                     double h, int n_pieces, int degree);

    /// pv integral of this(t)/(t - x) dt over the support; exact per piece.
    double pv_against_pole(double x) const;
};

/// Cardinal B-spline N_m (order m, degree m-1, support [0,m]) by the
/// Cox - de Boor recursion.
double bspline(int m, double x);

} // namespace czkit

#endif
