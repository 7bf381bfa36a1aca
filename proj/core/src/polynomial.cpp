#include "qinv/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include <absl/container/flat_hash_map.h>

#include "qinv/errors.hpp"

namespace qinv {

namespace {

bool term_less(const Polynomial::Term& a, const Polynomial::Term& b) { return a.first < b.first; }

}  // namespace

Polynomial Polynomial::constant(int k, const GaussianRational& c) {
  Polynomial p(k);
  if (!c.is_zero()) p.terms_.emplace_back(Monomial(), c);
  return p;
}

Polynomial Polynomial::variable(int k, VariableId v) { return monomial(k, Monomial::of(v)); }

Polynomial Polynomial::monomial(int k, Monomial m, GaussianRational c) {
  Polynomial p(k);
  if (!c.is_zero()) p.terms_.emplace_back(std::move(m), std::move(c));
  return p;
}

Polynomial Polynomial::from_terms(int k, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  Polynomial p(k);
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
    } else {
      if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
  return p;
}

void Polynomial::require_same_k(const Polynomial& q, const char* op) const {
  if (k_ != q.k_) {
    throw DimensionError(std::string(op) + ": ambient qubit counts differ (" + std::to_string(k_) +
                         " vs " + std::to_string(q.k_) + ")");
  }
}

Polynomial Polynomial::operator+(const Polynomial& q) const {
  require_same_k(q, "add");
  Polynomial r(k_);
  r.terms_.reserve(terms_.size() + q.terms_.size());
  auto i = terms_.begin();
  auto j = q.terms_.begin();
  while (i != terms_.end() && j != q.terms_.end()) {
    if (i->first < j->first) {
      r.terms_.push_back(*i++);
    } else if (j->first < i->first) {
      r.terms_.push_back(*j++);
    } else {
      GaussianRational c = i->second + j->second;
      if (!c.is_zero()) r.terms_.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  r.terms_.insert(r.terms_.end(), i, terms_.end());
  r.terms_.insert(r.terms_.end(), j, q.terms_.end());
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& q) const { return *this + (-q); }

Polynomial Polynomial::operator*(const Polynomial& q) const {
  require_same_k(q, "mul");
  if (terms_.empty() || q.terms_.empty()) return Polynomial(k_);
  absl::flat_hash_map<Monomial, GaussianRational, MonomialHash> acc;
  acc.reserve(std::min<std::size_t>(terms_.size() * q.terms_.size(), std::size_t{1} << 22));
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : q.terms_) {
      auto [it, inserted] = acc.try_emplace(ma * mb);
      it->second.add_product(ca, cb);
    }
  }
  Polynomial r(k_);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) r.terms_.emplace_back(m, std::move(c));
  }
  std::sort(r.terms_.begin(), r.terms_.end(), term_less);
  return r;
}

Polynomial Polynomial::scaled(const GaussianRational& c) const {
  if (c.is_zero()) return Polynomial(k_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(k_, GaussianRational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::partial(VariableId v) const {
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    const unsigned e = m.exponent_of(v);
    if (e == 0) continue;
    out.emplace_back(m.divided_by(v), c * GaussianRational(static_cast<long>(e)));
  }
  std::sort(out.begin(), out.end(), term_less);
  Polynomial r(k_);
  r.terms_ = std::move(out);
  return r;
}

bool Polynomial::has_primed_aux() const {
  for (const auto& t : terms_) {
    const Monomial& m = t.first;
    for (std::size_t i = 0; i < m.num_variables(); ++i) {
      const VariableId v = m.variable(i);
      if (v.is_aux() && v.copy() != AuxCopy::Plain) return true;
    }
  }
  return false;
}

Polynomial Polynomial::conjugate() const {
  if (has_primed_aux()) throw InternalStateError("conjugate: primed auxiliary variables present");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    out.emplace_back(m.mapped([](VariableId v) { return v.conjugated(); }), c.conj());
  }
  return from_terms(k_, std::move(out));
}

Polynomial Polynomial::map_variables(const std::function<VariableId(VariableId)>& f) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.emplace_back(m.mapped(f), c);
  return from_terms(k_, std::move(out));
}

Complex Polynomial::evaluate(const State& s, const AuxPoint* aux) const {
  if (s.k() != k_) {
    throw DimensionError("evaluate: state has k=" + std::to_string(s.k()) + ", polynomial has k=" +
                         std::to_string(k_));
  }
  auto value_of = [&](VariableId v) -> Complex {
    switch (v.kind()) {
      case VarKind::Amp:
        if (v.index() < s.size()) return s[v.index()];
        break;
      case VarKind::AmpConj:
        if (v.index() < s.size()) return std::conj(s[v.index()]);
        break;
      case VarKind::Aux:
        if (aux != nullptr && v.copy() == AuxCopy::Plain &&
            static_cast<std::size_t>(v.slot()) < aux->size()) {
          return (*aux)[static_cast<std::size_t>(v.slot())][static_cast<std::size_t>(v.component())];
        }
        break;
    }
    throw EvaluationError("unresolved variable " + v.name(k_));
  };
  Complex total = 0;
  for (const auto& [m, c] : terms_) {
    Complex t = c.to_complex();
    for (std::size_t i = 0; i < m.num_variables(); ++i) {
      const Complex x = value_of(m.variable(i));
      for (unsigned e = m.exponent(i); e > 0; --e) t *= x;
    }
    total += t;
  }
  return total;
}

GaussianRational Polynomial::evaluate_exact(
    const std::function<GaussianRational(VariableId)>& value) const {
  std::unordered_map<std::uint32_t, GaussianRational> cache;
  GaussianRational total;
  for (const auto& [m, c] : terms_) {
    GaussianRational t = c;
    for (std::size_t i = 0; i < m.num_variables(); ++i) {
      const VariableId v = m.variable(i);
      auto it = cache.find(v.code());
      if (it == cache.end()) it = cache.emplace(v.code(), value(v)).first;
      for (unsigned e = m.exponent(i); e > 0; --e) t *= it->second;
    }
    total += t;
  }
  return total;
}

GaussianRational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return t.first < x; });
  if (it != terms_.end() && it->first == m) return it->second;
  return GaussianRational();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < m.num_variables(); ++i) {
      if (!mono.empty()) mono += "*";
      mono += m.variable(i).name(k_);
      if (m.exponent(i) > 1) mono += "^" + std::to_string(m.exponent(i));
    }
    GaussianRational coef = c;
    bool negative = false;
    if (coef.is_real() && sgn(coef.re()) < 0) {
      negative = true;
      coef = -coef;
    }
    std::string cs = coef.to_string();
    std::string term;
    if (mono.empty()) {
      term = cs;
    } else if (coef == GaussianRational(1)) {
      term = mono;
    } else {
      term = cs + "*" + mono;
    }
    if (first) {
      out = negative ? "-" + term : term;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

std::optional<GaussianRational> proportionality(const Polynomial& p, const Polynomial& q) {
  if (p.k() != q.k() || p.size() != q.size() || p.is_zero()) return std::nullopt;
  GaussianRational c = p.terms().front().second / q.terms().front().second;
  if (c.is_zero()) return std::nullopt;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p.terms()[i].first == q.terms()[i].first)) return std::nullopt;
    if (!(p.terms()[i].second == c * q.terms()[i].second)) return std::nullopt;
  }
  return c;
}

}  // namespace qinv
