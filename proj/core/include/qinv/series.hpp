#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <absl/container/flat_hash_map.h>

namespace qinv::hilbert {

/// Sparse Laurent polynomial with integer coefficients in up to 7 variables
/// (exponents in [-127, 127], packed 8 bits per variable).
class LaurentPoly {
 public:
  static constexpr int kMaxVars = 7;

  explicit LaurentPoly(int num_vars = 0);

  int num_vars() const { return num_vars_; }
  std::size_t size() const { return terms_.size(); }

  void add(std::span<const int> exponents, std::int64_t coef);
  std::int64_t coefficient(std::span<const int> exponents) const;
  std::int64_t constant_term() const;

  /// p * q (checked integer arithmetic).
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);

  /// CT(this * other) without forming the product.
  std::int64_t constant_term_of_product(const LaurentPoly& other) const;

  /// this += c * y^shift * other.
  void add_shifted(const LaurentPoly& other, std::uint64_t shift, std::int64_t c);

  std::uint64_t pack(std::span<const int> exponents) const;
  std::vector<int> unpack(std::uint64_t key) const;

  const absl::flat_hash_map<std::uint64_t, std::int64_t>& terms() const { return terms_; }

 private:
  int num_vars_;
  std::uint64_t zero_key_;
  absl::flat_hash_map<std::uint64_t, std::int64_t> terms_;
};

/// Denominator factor (1 - z^{z_order} zbar^{zbar_order} y^{exponents})^{multiplicity}.
struct SeriesFactor {
  int z_order = 1;
  int zbar_order = 0;
  std::vector<int> exponents;
  int multiplicity = 1;
};

/// Truncated power series in (z, zbar) whose coefficients are Laurent
/// polynomials in the auxiliary variables; orders beyond the cutoff are never
/// stored or consulted.
class LaurentSeriesTruncation {
 public:
  LaurentSeriesTruncation(int num_vars, int cutoff_z, int cutoff_zbar);

  int cutoff_z() const { return n1_; }
  int cutoff_zbar() const { return n2_; }
  const LaurentPoly& coefficient(int i, int j) const { return grid_[index(i, j)]; }
  LaurentPoly& coefficient(int i, int j) { return grid_[index(i, j)]; }

  /// Multiplies by the geometric series of 1 / factor, in place.
  void divide_by(const SeriesFactor& factor);

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n2_ + 1) + static_cast<std::size_t>(j);
  }
  int vars_;
  int n1_;
  int n2_;
  std::vector<LaurentPoly> grid_;
};

/// A rational series  prefactor / (divisor * prod factors)  whose constant
/// term in all auxiliary variables is extracted coefficient by coefficient.
struct ConstantTermSpec {
  int num_vars = 0;
  std::vector<SeriesFactor> factors;
  LaurentPoly prefactor;
  std::int64_t divisor = 1;
};

/// table[n1][n2] = CT_y [z^{n1} zbar^{n2}] of the spec. Throws
/// SpecificationError for a factor with zero (z, zbar) order and
/// ConsistencyError if the divisor does not divide a coefficient.
std::vector<std::vector<std::int64_t>> constant_term_series(const ConstantTermSpec& spec, int max_z,
                                                            int max_zbar);

/// prod_j (1 - u_j^2)(1 - u_j^-2) over `slots` variables starting at `first`.
LaurentPoly weyl_prefactor(int num_vars, int first, int slots);

/// LUT series: variables (t, u_1..u_k), factors (1 - t^a z u^alpha) for
/// a = +-1 and alpha in {+-1}^k, Weyl prefactor, divisor 2^k.
ConstantTermSpec lut_spec(int k);
/// LSUT series: factors (1 - z u^alpha)(1 - zbar u^alpha), Weyl prefactor, divisor 2^k.
ConstantTermSpec lsut_spec(int k);
/// SLOCC invariant series: factors (1 - z u^alpha), Weyl prefactor, divisor 2^k.
ConstantTermSpec slocc_spec(int k);

std::vector<std::int64_t> lut_coeffs_ct(int k, int max_degree);
std::vector<std::vector<std::int64_t>> lsut_coeffs_ct(int k, int max_n1, int max_n2);
std::vector<std::int64_t> slocc_coeffs_ct(int k, int max_degree);

/// P / Q with integer numerator table and denominator
/// prod (1 - z^{e1} zbar^{e2})^{mult}. Univariate forms use e2 = 0.
struct ClosedForm {
  int num_vars = 1;
  std::map<std::pair<int, int>, std::int64_t> numerator;
  struct Factor {
    int e1 = 0;
    int e2 = 0;
    int multiplicity = 1;
  };
  std::vector<Factor> denominator;
};

/// Truncated expansion table[i][j], i <= max1, j <= max2.
std::vector<std::vector<std::int64_t>> expand_closed_form(const ClosedForm& form, int max1, int max2);
/// Univariate convenience: coefficients 0..max_degree.
std::vector<std::int64_t> expand_closed_form(const ClosedForm& form, int max_degree);

/// (1 - t^24) / ((1-t^2)(1-t^4)^3(1-t^6)(1-t^8)(1-t^12)).
ClosedForm lut3_closed_form();
/// Three-qubit LSUT series with numerator 1 + (z zbar)^2 + (z zbar)^3 + (z zbar)^5.
ClosedForm lsut3_closed_form();
/// 1 / (1 - t^4).
ClosedForm slocc3_closed_form();
/// 1 / ((1-t^2)(1-t^4)^2(1-t^6)).
ClosedForm slocc4_closed_form();
/// The four-qubit SLOCC denominator with (1-t)^6 in place of (1-t^6).
ClosedForm slocc4_linear_factor_form();

/// Reads a numerator/denominator table file (see README for the format).
ClosedForm load_closed_form(const std::string& path);
/// Directory holding table_lu4.json and table_lsu4.json: $QINV_DATA_DIR if
/// set, otherwise the configured install/build location.
std::string data_dir();
ClosedForm lut4_closed_form(const std::string& dir = data_dir());
ClosedForm lsut4_closed_form(const std::string& dir = data_dir());

}  // namespace qinv::hilbert
