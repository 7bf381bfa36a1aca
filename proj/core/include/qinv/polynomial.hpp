#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qinv/gaussian_rational.hpp"
#include "qinv/monomial.hpp"
#include "qinv/state.hpp"

namespace qinv {

/// Exact sparse polynomial over Q(i) in amplitude, conjugate-amplitude and
/// auxiliary variables of an ambient k-qubit system.
///
/// Terms are kept sorted by monomial with no zero coefficients, so two
/// polynomials are equal iff their term vectors are equal. Values are
/// immutable once built; every operation returns a new polynomial.
class Polynomial {
 public:
  using Term = std::pair<Monomial, GaussianRational>;

  explicit Polynomial(int k = 0) : k_(k) {}

  static Polynomial constant(int k, const GaussianRational& c);
  static Polynomial variable(int k, VariableId v);
  static Polynomial monomial(int k, Monomial m, GaussianRational c = GaussianRational(1));
  /// Canonicalizes: merges duplicates, drops zeros, sorts.
  static Polynomial from_terms(int k, std::vector<Term> terms);

  int k() const { return k_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Polynomial operator+(const Polynomial& q) const;
  Polynomial operator-(const Polynomial& q) const;
  Polynomial operator*(const Polynomial& q) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& q) { return *this = *this + q; }
  Polynomial& operator-=(const Polynomial& q) { return *this = *this - q; }
  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

  Polynomial scaled(const GaussianRational& c) const;
  Polynomial pow(unsigned e) const;

  /// Formal partial derivative with respect to v.
  Polynomial partial(VariableId v) const;

  /// a <-> abar with conjugated coefficients. Throws InternalStateError if a
  /// primed auxiliary variable is present.
  Polynomial conjugate() const;

  /// Renames every variable through f, merging monomials that collide.
  Polynomial map_variables(const std::function<VariableId(VariableId)>& f) const;

  bool has_primed_aux() const;

  /// Numeric value at the amplitudes of s (conjugates for AmpConj) and the
  /// optional auxiliary point. Throws EvaluationError naming the first
  /// unresolved variable.
  Complex evaluate(const State& s, const AuxPoint* aux = nullptr) const;

  /// Exact value with every variable supplied by `value`.
  GaussianRational evaluate_exact(const std::function<GaussianRational(VariableId)>& value) const;

  /// Coefficient of the exact monomial m (zero if absent).
  GaussianRational coefficient(const Monomial& m) const;

  /// Human-readable form: sorted monomials, exact coefficients.
  std::string to_string() const;

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    return p.k_ == q.k_ && p.terms_ == q.terms_;
  }

 private:
  void require_same_k(const Polynomial& q, const char* op) const;

  int k_;
  std::vector<Term> terms_;
};

/// If p = c * q for a nonzero scalar c, returns c.
std::optional<GaussianRational> proportionality(const Polynomial& p, const Polynomial& q);

}  // namespace qinv
