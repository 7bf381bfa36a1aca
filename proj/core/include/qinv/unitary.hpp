#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qinv/catalog.hpp"
#include "qinv/polynomial.hpp"
#include "qinv/transvection.hpp"

namespace qinv {

/// Polynomial in the amplitudes and their conjugates, homogeneous of degree
/// n1 in a and n2 in abar.
struct InvariantExpr {
  Polynomial poly;
  int n1 = 0;
  int n2 = 0;
  std::string name;

  int k() const { return poly.k(); }
  Complex evaluate(const State& s) const { return poly.evaluate(s); }
  /// Complex conjugate: bidegree (n2, n1).
  InvariantExpr conjugate() const;
  /// Throws ArgumentError on auxiliary variables or inhomogeneous bidegree.
  void validate() const;
};

/// Wraps a polynomial in a, abar, inferring the bidegree (zero polynomial:
/// the given fallback).
InvariantExpr make_invariant(Polynomial p, std::string name = {}, int n1 = 0, int n2 = 0);

/// <phi|psi> = sum_m coef_phi(m) conj(coef_psi(m)) prod_j p_j! q_j!, where m
/// runs over auxiliary monomials and (p_j, q_j) are its slot exponents.
/// phi enters holomorphically, so the bidegree is (deg phi, deg psi).
/// Mismatched multidegrees give the zero invariant.
InvariantExpr pairing(const Covariant& phi, const Covariant& psi);

/// Numeric <phi|psi> at a state without expanding the product polynomial.
class PairingEvaluator {
 public:
  PairingEvaluator(const Covariant& phi, const Covariant& psi);
  Complex operator()(const State& s) const;

 private:
  struct Block {
    Polynomial phi;
    Polynomial psi;
    double weight;
  };
  std::vector<Block> blocks_;
};

/// {<f|f>^2} followed by <B_d|B_d> for d != (2..2) in b_family_indices order.
std::vector<InvariantExpr> lut_degree4_basis(int k);

/// (f, C_i)^{1..1}, <C_i|f>, the LUT degree-4 basis, then the conjugates of
/// the (3,1) and (4,0) members, with C_i from degree3_multilinear_basis.
std::vector<InvariantExpr> lsut_degree4_basis(int k);

/// Outcome of an exact identity. `residual` is lhs - rhs after any recorded
/// convention scalar has been applied.
struct IdentityResult {
  std::string name;
  bool holds = false;
  Polynomial residual;
  std::optional<GaussianRational> scalar;
  std::string note;
};

/// <f^2|f^2> == 2^k <f|f>^2 - sum_{d != 2..2} <B_d|B_d>.
IdentityResult f_squared_relation_check(int k);

/// Three-qubit building blocks with their usual names: A_111, B_200, B_020,
/// B_002, C_111 = <T|T>, D_000 = <Delta|Delta>, F_222 = <Delta f^2|T^2>,
/// Delta, s2 = <T|f>.
InvariantExpr three_qubit_invariant(const std::string& name);

/// Factor on D_000 (3/2 sum B - A_111^2)/2 + F_222/8 in f_7 relative to
/// 2 C_111^2 - 4 B_200 B_020 B_002, fixed by f7_check.
inline constexpr long kF7DeltaGroupScalar = -1;

/// f_i, i = 1..7, from the pairing side.
InvariantExpr grassl_f(int i);

/// sum a_{ijk} abar_{i^sigma j^tau k^rho} over index tuples of length n.
/// Permutations are given as images of 1..n.
InvariantExpr grassl_sum(std::span<const int> sigma, std::span<const int> tau, std::span<const int> rho);

/// f_i built literally: permutation sums for i = 1..5, D_000 for 6 and the
/// bracket/brace expansion for 7.
InvariantExpr grassl_f_literal(int i);

/// Literal f_2..f_5 against their pairing expressions.
std::vector<IdentityResult> grassl_identity_checks();

/// Literal f_7 = conj(Delta) X^2 against the pairing expression: after
/// removing 2 C_111^2 - 4 B_200 B_020 B_002 the remainder must be a rational
/// multiple of the Delta-dependent group, reported as `scalar`.
IdentityResult f7_check();

/// The two LSUT syzygies in degrees (4,4) and (6,6). Delta and s2 enter
/// with scale factors fitted on the first relation; the second relation is
/// then checked with no further freedom. `scalar` carries |alpha|^2 for
/// Delta (first) and conj(alpha) beta^2 (second).
std::vector<IdentityResult> syzygy_checks();

/// Coordinate rows completing the Jacobian: a_100..a_111, abar_011..abar_111.
std::vector<VariableId> jacobian_coordinates();

/// 16x16 Jacobian of A_111, f2, f3, Delta, conj Delta, s2, conj s2 and the
/// coordinate rows, in (a_000..a_111, abar_000..abar_111) at the reference
/// point with abar set to the conjugates.
GaussianRational jacobian_independence();

/// The same seven invariant rows completed by arbitrary coordinate rows.
GaussianRational jacobian_with_coordinates(std::span<const VariableId> coordinates);

/// Same Jacobian with f2 replaced by A_111^2.
GaussianRational jacobian_degenerate();

/// The point at which jacobian_independence is taken.
std::vector<GaussianRational> jacobian_point();

}  // namespace qinv
