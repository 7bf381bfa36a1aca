#include "qinv/monomial.hpp"

#include <algorithm>

#include "qinv/errors.hpp"

namespace qinv {

std::string bitstring(std::uint32_t index, int k) {
  std::string s(static_cast<std::size_t>(k), '0');
  for (int j = 0; j < k; ++j) {
    if ((index >> (k - 1 - j)) & 1u) s[static_cast<std::size_t>(j)] = '1';
  }
  return s;
}

std::string VariableId::name(int k) const {
  switch (kind()) {
    case VarKind::Amp:
      return "a[" + bitstring(index(), k) + "]";
    case VarKind::AmpConj:
      return "abar[" + bitstring(index(), k) + "]";
    case VarKind::Aux: {
      std::string s = "x" + std::to_string(slot() + 1) + "_" + std::to_string(component());
      if (copy() == AuxCopy::Prime) s += "'";
      if (copy() == AuxCopy::DoublePrime) s += "''";
      return s;
    }
  }
  return "?";
}

Monomial Monomial::of(VariableId v, unsigned exponent) {
  Monomial m;
  if (exponent > 0) m.multiply_var(v, exponent);
  return m;
}

unsigned Monomial::exponent_of(VariableId v) const {
  const std::uint32_t key = v.code() << 8;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key);
  if (it != entries_.end() && (*it >> 8) == v.code()) return *it & 0xffu;
  return 0;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (auto e : entries_) d += e & 0xffu;
  return d;
}

unsigned Monomial::degree_of_kind(VarKind kind) const {
  unsigned d = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (variable(i).kind() == kind) d += exponent(i);
  }
  return d;
}

unsigned Monomial::aux_degree(int slot) const {
  unsigned d = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const VariableId v = variable(i);
    if (v.is_aux() && v.slot() == slot) d += exponent(i);
  }
  return d;
}

void Monomial::multiply_var(VariableId v, unsigned exponent) {
  if (exponent == 0) return;
  const std::uint32_t key = v.code() << 8;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key);
  if (it != entries_.end() && (*it >> 8) == v.code()) {
    const unsigned e = (*it & 0xffu) + exponent;
    if (e > 0xffu) throw ArgumentError("monomial exponent overflow");
    *it = key | e;
  } else {
    if (exponent > 0xffu) throw ArgumentError("monomial exponent overflow");
    entries_.insert(it, key | exponent);
  }
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.entries_.reserve(a.entries_.size() + b.entries_.size());
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() && j != b.entries_.end()) {
    const std::uint32_t ci = *i >> 8;
    const std::uint32_t cj = *j >> 8;
    if (ci < cj) {
      out.entries_.push_back(*i++);
    } else if (cj < ci) {
      out.entries_.push_back(*j++);
    } else {
      const unsigned e = (*i & 0xffu) + (*j & 0xffu);
      if (e > 0xffu) throw ArgumentError("monomial exponent overflow");
      out.entries_.push_back((ci << 8) | e);
      ++i;
      ++j;
    }
  }
  out.entries_.insert(out.entries_.end(), i, a.entries_.end());
  out.entries_.insert(out.entries_.end(), j, b.entries_.end());
  return out;
}

Monomial Monomial::divided_by(VariableId v) const {
  Monomial out = *this;
  const std::uint32_t key = v.code() << 8;
  auto it = std::lower_bound(out.entries_.begin(), out.entries_.end(), key);
  if (it == out.entries_.end() || (*it >> 8) != v.code()) {
    throw InternalStateError("divided_by: variable not present");
  }
  if ((*it & 0xffu) == 1) {
    out.entries_.erase(it);
  } else {
    *it -= 1;
  }
  return out;
}

void Monomial::split_aux(Monomial& amp_part, Monomial& aux_part) const {
  amp_part.entries_.clear();
  aux_part.entries_.clear();
  for (auto e : entries_) {
    if (VariableId::from_code(e >> 8).is_aux()) {
      aux_part.entries_.push_back(e);
    } else {
      amp_part.entries_.push_back(e);
    }
  }
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ entries_.size();
  for (auto e : entries_) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

}  // namespace qinv
