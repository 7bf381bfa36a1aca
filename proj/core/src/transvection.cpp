#include "qinv/transvection.hpp"

#include <algorithm>

#include "qinv/errors.hpp"

namespace qinv {

void Covariant::validate() const {
  const int k = poly.k();
  if (static_cast<int>(multidegree.size()) != k) {
    throw ArgumentError("covariant multidegree has " + std::to_string(multidegree.size()) +
                        " entries for k=" + std::to_string(k));
  }
  for (const auto& [m, c] : poly.terms()) {
    if (static_cast<int>(m.degree_of_kind(VarKind::Amp)) != amp_degree ||
        m.degree_of_kind(VarKind::AmpConj) != 0) {
      throw ArgumentError("covariant " + name + ": monomial of wrong amplitude degree");
    }
    for (std::size_t i = 0; i < m.num_variables(); ++i) {
      const VariableId v = m.variable(i);
      if (v.is_aux() && v.copy() != AuxCopy::Plain) {
        throw InternalStateError("covariant " + name + ": primed auxiliary variable present");
      }
    }
    for (int j = 0; j < k; ++j) {
      if (static_cast<int>(m.aux_degree(j)) != multidegree[static_cast<std::size_t>(j)]) {
        throw ArgumentError("covariant " + name + ": monomial of wrong degree in slot " +
                            std::to_string(j + 1));
      }
    }
  }
}

Covariant operator*(const Covariant& a, const Covariant& b) {
  if (a.k() != b.k()) throw DimensionError("covariant product: ambient qubit counts differ");
  Covariant c;
  c.poly = a.poly * b.poly;
  c.amp_degree = a.amp_degree + b.amp_degree;
  c.multidegree.resize(a.multidegree.size());
  for (std::size_t j = 0; j < c.multidegree.size(); ++j) {
    c.multidegree[j] = a.multidegree[j] + b.multidegree[j];
  }
  c.name = a.name + "*" + b.name;
  return c;
}

Covariant make_covariant(Polynomial p, std::string name) {
  Covariant c;
  const int k = p.k();
  c.multidegree.assign(static_cast<std::size_t>(k), 0);
  if (!p.is_zero()) {
    const Monomial& m = p.terms().front().first;
    c.amp_degree = static_cast<int>(m.degree_of_kind(VarKind::Amp));
    for (int j = 0; j < k; ++j) c.multidegree[static_cast<std::size_t>(j)] = static_cast<int>(m.aux_degree(j));
  }
  c.poly = std::move(p);
  c.name = std::move(name);
  c.validate();
  return c;
}

namespace {

Polynomial with_copy(const Polynomial& p, AuxCopy copy) {
  return p.map_variables([copy](VariableId v) { return v.is_aux() ? v.with_copy(copy) : v; });
}

/// One application of Omega_{x^(slot)} = d/dx'_0 d/dx''_1 - d/dx'_1 d/dx''_0.
Polynomial omega(const Polynomial& p, int slot) {
  const VariableId p0 = VariableId::aux(slot, 0, AuxCopy::Prime);
  const VariableId p1 = VariableId::aux(slot, 1, AuxCopy::Prime);
  const VariableId q0 = VariableId::aux(slot, 0, AuxCopy::DoublePrime);
  const VariableId q1 = VariableId::aux(slot, 1, AuxCopy::DoublePrime);
  return p.partial(p0).partial(q1) - p.partial(p1).partial(q0);
}

}  // namespace

Covariant transvect(const Covariant& phi, const Covariant& psi, std::span<const int> eps) {
  const int k = phi.k();
  if (psi.k() != k) throw DimensionError("transvect: operands have different qubit counts");
  if (static_cast<int>(eps.size()) != k) {
    throw DimensionError("transvect: index tuple has " + std::to_string(eps.size()) +
                         " entries for k=" + std::to_string(k));
  }
  for (int j = 0; j < k; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    if (eps[uj] < 0 || eps[uj] > std::min(phi.multidegree[uj], psi.multidegree[uj])) {
      throw DegreeError("transvect: index " + std::to_string(eps[uj]) + " in slot " +
                        std::to_string(j + 1) + " exceeds operand degrees " +
                        std::to_string(phi.multidegree[uj]) + ", " +
                        std::to_string(psi.multidegree[uj]));
    }
  }

  Polynomial p = with_copy(phi.poly, AuxCopy::Prime) * with_copy(psi.poly, AuxCopy::DoublePrime);
  for (int j = 0; j < k && !p.is_zero(); ++j) {
    for (int r = 0; r < eps[static_cast<std::size_t>(j)]; ++r) p = omega(p, j);
  }
  p = with_copy(p, AuxCopy::Plain);

  Covariant out;
  out.poly = std::move(p);
  out.amp_degree = phi.amp_degree + psi.amp_degree;
  out.multidegree.resize(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    out.multidegree[uj] = phi.multidegree[uj] + psi.multidegree[uj] - 2 * eps[uj];
  }
  std::string e;
  for (int x : eps) e += std::to_string(x);
  out.name = "(" + phi.name + "," + psi.name + ")^" + e;
  return out;
}

Complex evaluate(const Covariant& c, const State& s, const AuxPoint& x) {
  return c.poly.evaluate(s, &x);
}

}  // namespace qinv
