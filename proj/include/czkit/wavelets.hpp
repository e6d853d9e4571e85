#ifndef CZKIT_WAVELETS_HPP
#define CZKIT_WAVELETS_HPP

#include <map>
#include <string>
#include <vector>

#include "czkit/interval.hpp"
#include "czkit/piecewise_poly.hpp"
#include "czkit/sampled_function.hpp"

namespace czkit {

/// Near-orthonormal wavelet system over the dyadic grid.
///
/// The mother is a compactly supported semi-orthogonal spline wavelet
/// (Chui-Wang, order m) orthonormalized within its scale by a truncated
/// convolution with the inverse square root of its shift Gram symbol.
/// Cross-scale inner products vanish exactly (the wavelet spaces W_j are
/// mutually orthogonal); the in-scale Gram deviates from the identity only
/// by the truncation tail, certified by gram_deviation().
struct WaveletBasis {
    PiecewisePoly mother;    // piecewise degree m-1 on the half-integer grid
    int spline_order = 3;    // m
    int trunc_K = 20;        // orthonormalization taps kept on each side
    int deriv_order = 2;     // derivatives available (piecewise beyond C^{m-2})
    double tau_orth = 1e-6;  // declared orthonormality tolerance

    double psi(const DyadicInterval& I, double x, int n = 0) const;
    Interval psi_support(const DyadicInterval& I) const;
    SampledFunction psi_fn(const DyadicInterval& I) const;

    /// L1-normalized positive companion profile (integral one), and its
    /// translate-dilate onto I; used by the paraproduct machinery.
    SampledFunction companion() const;
    SampledFunction companion_on(const Interval& I) const;

    /// <psi_I, psi_J>, exact per-piece quadrature on the finer lattice.
    double inner_product(const DyadicInterval& I, const DyadicInterval& J) const;
};

/// Builds the basis; m in {2,3,4}, K controls the orthonormalization tail.
WaveletBasis build_spline_basis(int m = 3, int K = 20);

/// Finite wavelet coefficient family, iteration sorted by (j,k).
struct CoefficientMap {
    std::map<DyadicInterval, double> c;

    double get(const DyadicInterval& I) const {
        auto it = c.find(I);
        return it == c.end() ? 0.0 : it->second;
    }
    void set(const DyadicInterval& I, double v) { c[I] = v; }
    std::size_t size() const { return c.size(); }

    CoefficientMap operator-(const CoefficientMap& o) const;
    double dot(const CoefficientMap& o) const;
};

/// <f, psi_I> by composite quadrature; panel_h caps the panel width
/// (pass the finest half-lattice width for piecewise-polynomial f).
double coeff(const WaveletBasis& basis, const SampledFunction& f, const DyadicInterval& I,
             double panel_h = 0.5);

/// Coefficients over every interval of the window.
CoefficientMap analyze(const WaveletBasis& basis, const SampledFunction& f,
                       const LagomWindow& window, double panel_h = 0.5);

/// Window-truncated synthesis sum_I c_I psi_I as a SampledFunction.
SampledFunction synthesize(const WaveletBasis& basis, const CoefficientMap& c);

/// Keeps coefficients with I in D_M (or the complement); exact filter.
CoefficientMap project_lagom(const CoefficientMap& c, int M, bool complement);

/// max over window pairs of |<psi_I, psi_J> - delta_IJ|.
double gram_deviation(const WaveletBasis& basis, const LagomWindow& window);

/// L2 distance between f and the synthesis of c, integrated exactly on
/// the lattice of the given finest scale over the window interior.
double reconstruction_error(const WaveletBasis& basis, const SampledFunction& f,
                            const CoefficientMap& c, const LagomWindow& window);

/// JSON array of {j, k, hex} records; bit-exact round trip.
std::string serialize_coefficients(const CoefficientMap& c);
CoefficientMap deserialize_coefficients(const std::string& json_text);

} // namespace czkit

#endif
