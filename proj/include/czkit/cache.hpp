#ifndef CZKIT_CACHE_HPP
#define CZKIT_CACHE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "czkit/operators.hpp"

namespace czkit {

std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t seed = 0xcbf29ce484222325ull);
std::uint64_t fnv1a_str(const std::string& s, std::uint64_t seed = 0xcbf29ce484222325ull);

/// Hash over kernel identity, window, basis and quadrature format version.
std::uint64_t assembly_spec_hash(const CZKernel& K, const WaveletBasis& basis,
                                 const LagomWindow& window);

std::string matrix_cache_path(const std::string& dir, std::uint64_t spec_hash);

/// Binary cache: magic "CZK1", format version, spec hash, records
/// (j_I, k_I, j_J, k_J, value) little-endian, 64-bit floats, and an
/// FNV checksum trailer.  Writes are atomic (temp file then rename).
bool write_matrix_cache(const std::string& path, const CoefficientMatrix& A);

/// Loads and validates; returns nothing on missing file, hash mismatch,
/// or checksum corruption.
std::optional<CoefficientMatrix> read_matrix_cache(const std::string& path,
                                                   std::uint64_t expected_hash);

} // namespace czkit

#endif
