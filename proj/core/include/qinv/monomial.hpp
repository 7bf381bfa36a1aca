#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "qinv/variable.hpp"

namespace qinv {

/// Power product of variables, stored as a sorted list of packed
/// (variable code, exponent) entries. Equal monomials compare equal
/// entry-by-entry, so the representation is canonical.
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(VariableId v, unsigned exponent = 1);

  bool is_one() const { return entries_.empty(); }
  std::size_t num_variables() const { return entries_.size(); }

  VariableId variable(std::size_t i) const { return VariableId::from_code(entries_[i] >> 8); }
  unsigned exponent(std::size_t i) const { return entries_[i] & 0xffu; }
  unsigned exponent_of(VariableId v) const;

  unsigned total_degree() const;
  unsigned degree_of_kind(VarKind kind) const;
  /// Total exponent of plain/primed auxiliaries of slot j (all copies).
  unsigned aux_degree(int slot) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);

  /// Lowers the exponent of v by one; the caller ensures v divides the monomial.
  Monomial divided_by(VariableId v) const;

  /// Split into the Amp/AmpConj part and the Aux part.
  void split_aux(Monomial& amp_part, Monomial& aux_part) const;

  /// Rebuilds the monomial with every variable passed through f, merging
  /// exponents of variables that collide.
  template <typename F>
  Monomial mapped(F&& f) const {
    Monomial out;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.multiply_var(f(variable(i)), exponent(i));
    return out;
  }

  void multiply_var(VariableId v, unsigned exponent);

  std::size_t hash() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.entries_ == b.entries_; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.entries_ < b.entries_; }

 private:
  boost::container::small_vector<std::uint32_t, 12> entries_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace qinv
