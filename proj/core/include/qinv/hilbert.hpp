#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace qinv::hilbert {

/// Integer partition with weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;  // n = sum of parts
  int length() const { return static_cast<int>(parts.size()); }
  /// z_lambda = prod_i i^{m_i} m_i!.
  mpz_class z() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// All partitions of n in reverse lexicographic order ((n) first).
std::vector<Partition> partitions(int n);

/// chi^lambda(mu) by the Murnaghan-Nakayama rule.
long long mn_character(const Partition& lambda, const Partition& mu);

/// dim Cov(n; k; d): multiplicity of the trivial S_n character in the product
/// of the two-row characters chi^{((n+d_j)/2, (n-d_j)/2)}. Zero when some d_j
/// has the wrong parity or exceeds n.
std::uint64_t dim_cov(int n, int k, std::span<const int> d);

/// dim of degree-`degree` SLOCC invariants; odd degrees give 0.
std::uint64_t dim_inv_slocc(int degree, int k);

/// Total dimension of covariants of amplitude degree d (all multidegrees).
std::uint64_t dim_cov_total(int d, int k);

/// Coefficients h_0..h_N of the SLOCC invariant series (character route).
std::vector<std::int64_t> hilbert_slocc_coeffs(int k, int max_degree);

/// Coefficients of z^0..z^N of the LUT invariant series; entry 2n is
/// sum_d dim Cov(n;k;d)^2 and odd entries are zero.
std::vector<std::int64_t> hilbert_lut_coeffs(int k, int max_degree);

/// table[n1][n2] = sum_d dim Cov(n1;k;d) dim Cov(n2;k;d).
std::vector<std::vector<std::int64_t>> hilbert_lsut_coeffs(int k, int max_n1, int max_n2);

}  // namespace qinv::hilbert
