#pragma once

#include <span>
#include <string>
#include <vector>

#include "qinv/polynomial.hpp"
#include "qinv/state.hpp"

namespace qinv {

/// A joint polynomial in amplitudes and plain auxiliary variables, homogeneous
/// of degree `amp_degree` in the amplitudes and of degree multidegree[j] in
/// slot j.
struct Covariant {
  Polynomial poly;
  int amp_degree = 0;
  std::vector<int> multidegree;
  std::string name;

  int k() const { return poly.k(); }

  /// Throws ArgumentError if some monomial breaks the declared degrees or a
  /// conjugate/primed variable is present.
  void validate() const;

  /// Product covariant: degrees add.
  friend Covariant operator*(const Covariant& a, const Covariant& b);
};

/// Wraps a polynomial, inferring degrees from its first term and validating.
Covariant make_covariant(Polynomial p, std::string name = {});

/// Transvectant (phi, psi)^eps: phi on primed and psi on double-primed
/// auxiliaries, Omega_{x^(j)}^{eps_j} in every slot, then x', x'' -> x.
/// No normalization factor is applied.
Covariant transvect(const Covariant& phi, const Covariant& psi, std::span<const int> eps);

/// Numeric value of a covariant at a state and auxiliary point.
Complex evaluate(const Covariant& c, const State& s, const AuxPoint& x);

}  // namespace qinv
