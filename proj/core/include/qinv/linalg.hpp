#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qinv/gaussian_rational.hpp"
#include "qinv/polynomial.hpp"

namespace qinv {

/// Incremental reduced row echelon form over Q(i) with polynomials as rows
/// (coordinates are coefficients of monomials). Used for exact rank and for
/// selecting linearly independent subsets in a fixed candidate order.
class PolynomialEchelon {
 public:
  /// Reduces p against the current rows; if a nonzero remainder is left it
  /// becomes a new row and true is returned.
  bool insert(const Polynomial& p);
  /// True if p lies in the span of the rows inserted so far.
  bool contains(const Polynomial& p) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  Polynomial reduce(Polynomial p) const;

  struct Row {
    Monomial pivot;
    Polynomial poly;  // pivot coefficient normalized to 1
  };
  std::vector<Row> rows_;
};

/// Exact rank of a family of polynomials.
std::size_t exact_rank(std::span<const Polynomial> family);

/// Coefficients c with target == sum c_i basis_i, or nullopt if target is
/// outside the span. Free coordinates of a dependent basis are set to zero.
std::optional<std::vector<GaussianRational>> solve_combination(const Polynomial& target,
                                                               std::span<const Polynomial> basis);

/// Exact determinant by fraction-producing Gaussian elimination.
GaussianRational determinant(std::vector<std::vector<GaussianRational>> m);

}  // namespace qinv
