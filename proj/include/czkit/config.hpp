#ifndef CZKIT_CONFIG_HPP
#define CZKIT_CONFIG_HPP

#include <string>

#include "czkit/interval.hpp"

namespace czkit {

/// Flat sectioned key=value run configuration.  Unknown keys reject.
struct RunConfig {
    // [kernel]
    std::string kernel = "commutator_gauss";
    std::string paraproduct_b = "gauss_cos"; // used when kernel = paraproduct
    // [window]
    int M = 2;
    double R = 8.0;
    int j_min = -3;
    int j_max = 3;
    // [basis]
    int basis_m = 3;
    int basis_K = 20;
    double tau_orth = 1e-6;
    // [quadrature]
    double tolerance = 1e-10;
    // [run]
    std::string out_path;
    std::string cache_dir;
    int threads = 0;
    // [t1]
    int k_min = 2;
    int k_max = 9;

    LagomWindow window() const { return LagomWindow(M, R, j_min, j_max); }

    static RunConfig parse_text(const std::string& text);
    static RunConfig parse_file(const std::string& path);

    /// Canonical text form; parse_text(normalized()) == *this field-wise.
    std::string normalized() const;
};

} // namespace czkit

#endif
