#include "qinv/unitary.hpp"

#include <array>
#include <map>
#include <mutex>

#include "qinv/errors.hpp"
#include "qinv/linalg.hpp"

namespace qinv {

namespace {

using Blocks = std::map<Monomial, std::vector<Polynomial::Term>>;

Blocks split_by_aux(const Polynomial& p) {
  Blocks blocks;
  for (const auto& [m, c] : p.terms()) {
    Monomial amp;
    Monomial aux;
    m.split_aux(amp, aux);
    blocks[aux].emplace_back(std::move(amp), c);
  }
  return blocks;
}

mpz_class aux_weight(const Monomial& aux) {
  mpz_class w = 1;
  for (std::size_t i = 0; i < aux.num_variables(); ++i) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), aux.exponent(i));
    w *= f;
  }
  return w;
}

Polynomial scaled(const Polynomial& p, long num, long den = 1) {
  return p.scaled(GaussianRational::rational(num, den));
}

}  // namespace

InvariantExpr InvariantExpr::conjugate() const {
  InvariantExpr c;
  c.poly = poly.conjugate();
  c.n1 = n2;
  c.n2 = n1;
  c.name = "conj(" + name + ")";
  return c;
}

void InvariantExpr::validate() const {
  for (const auto& [m, c] : poly.terms()) {
    if (m.degree_of_kind(VarKind::Aux) != 0) throw ArgumentError("invariant " + name + " contains auxiliary variables");
    if (static_cast<int>(m.degree_of_kind(VarKind::Amp)) != n1 ||
        static_cast<int>(m.degree_of_kind(VarKind::AmpConj)) != n2) {
      throw ArgumentError("invariant " + name + " is not of bidegree (" + std::to_string(n1) + "," +
                          std::to_string(n2) + ")");
    }
  }
}

InvariantExpr make_invariant(Polynomial p, std::string name, int n1, int n2) {
  InvariantExpr e;
  if (!p.is_zero()) {
    const Monomial& m = p.terms().front().first;
    n1 = static_cast<int>(m.degree_of_kind(VarKind::Amp));
    n2 = static_cast<int>(m.degree_of_kind(VarKind::AmpConj));
  }
  e.poly = std::move(p);
  e.n1 = n1;
  e.n2 = n2;
  e.name = std::move(name);
  e.validate();
  return e;
}

InvariantExpr pairing(const Covariant& phi, const Covariant& psi) {
  if (phi.k() != psi.k()) throw DimensionError("pairing: covariants of different k");
  const int k = phi.k();
  const std::string name = "<" + phi.name + "|" + psi.name + ">";
  Polynomial out(k);
  if (phi.multidegree == psi.multidegree) {
    const Blocks a = split_by_aux(phi.poly);
    const Blocks b = split_by_aux(psi.poly);
    for (const auto& [aux, terms] : a) {
      auto it = b.find(aux);
      if (it == b.end()) continue;
      const Polynomial p = Polynomial::from_terms(k, terms);
      const Polynomial q = Polynomial::from_terms(k, it->second).conjugate();
      out += (p * q).scaled(GaussianRational(mpq_class(aux_weight(aux))));
    }
  }
  return make_invariant(std::move(out), name, phi.amp_degree, psi.amp_degree);
}

PairingEvaluator::PairingEvaluator(const Covariant& phi, const Covariant& psi) {
  if (phi.k() != psi.k()) throw DimensionError("pairing: covariants of different k");
  if (phi.multidegree != psi.multidegree) return;
  const int k = phi.k();
  const Blocks a = split_by_aux(phi.poly);
  const Blocks b = split_by_aux(psi.poly);
  for (const auto& [aux, terms] : a) {
    auto it = b.find(aux);
    if (it == b.end()) continue;
    blocks_.push_back({Polynomial::from_terms(k, terms), Polynomial::from_terms(k, it->second),
                       aux_weight(aux).get_d()});
  }
}

Complex PairingEvaluator::operator()(const State& s) const {
  Complex total = 0;
  for (const auto& b : blocks_) total += b.weight * b.phi.evaluate(s) * std::conj(b.psi.evaluate(s));
  return total;
}

std::vector<InvariantExpr> lut_degree4_basis(int k) {
  if (k < 2) throw ArgumentError("lut_degree4_basis: k must be at least 2");
  const Covariant f = ground_form(k);
  const InvariantExpr a = pairing(f, f);
  std::vector<InvariantExpr> out;
  out.push_back(make_invariant(a.poly * a.poly, "<f|f>^2"));
  const auto indices = b_family_indices(k);
  for (std::size_t i = 1; i < indices.size(); ++i) {
    const Covariant& b = b_family(k, indices[i]);
    InvariantExpr e = pairing(b, b);
    e.name = b_name(indices[i]);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<InvariantExpr> lsut_degree4_basis(int k) {
  if (k < 2) throw ArgumentError("lsut_degree4_basis: k must be at least 2");
  const Covariant f = ground_form(k);
  const std::vector<int> ones(static_cast<std::size_t>(k), 1);
  const std::vector<Covariant> cs = degree3_multilinear_basis(k);
  std::vector<InvariantExpr> d;
  std::vector<InvariantExpr> c;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    d.push_back(make_invariant(transvect(f, cs[i], ones).poly, "D" + std::to_string(i + 1), 4, 0));
    InvariantExpr ci = pairing(cs[i], f);
    ci.name = "C" + std::to_string(i + 1);
    c.push_back(std::move(ci));
  }
  std::vector<InvariantExpr> out = d;
  out.insert(out.end(), c.begin(), c.end());
  for (auto& b : lut_degree4_basis(k)) out.push_back(std::move(b));
  for (const auto& e : c) out.push_back(e.conjugate());
  for (const auto& e : d) out.push_back(e.conjugate());
  return out;
}

IdentityResult f_squared_relation_check(int k) {
  if (k < 2) throw ArgumentError("f_squared_relation_check: k must be at least 2");
  const Covariant f = ground_form(k);
  const auto indices = b_family_indices(k);
  const Covariant& f2 = b_family(k, indices.front());
  const Polynomial lhs = pairing(f2, f2).poly;
  const Polynomial a = pairing(f, f).poly;
  Polynomial rhs = (a * a).scaled(GaussianRational(1L << k));
  for (std::size_t i = 1; i < indices.size(); ++i) {
    const Covariant& b = b_family(k, indices[i]);
    rhs -= pairing(b, b).poly;
  }
  IdentityResult r;
  r.name = "f_squared_k" + std::to_string(k);
  r.residual = lhs - rhs;
  r.holds = r.residual.is_zero();
  return r;
}

InvariantExpr three_qubit_invariant(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, InvariantExpr> memo;
  {
    std::lock_guard lock(mu);
    auto it = memo.find(name);
    if (it != memo.end()) return it->second;
  }
  auto pair = [](const char* p, const char* q) { return pairing(catalog_3(p), catalog_3(q)); };
  InvariantExpr e;
  if (name == "A_111") {
    e = pair("f", "f");
  } else if (name == "B_200") {
    e = pair("Hx", "Hx");
  } else if (name == "B_020") {
    e = pair("Hy", "Hy");
  } else if (name == "B_002") {
    e = pair("Hz", "Hz");
  } else if (name == "C_111") {
    e = pair("T", "T");
  } else if (name == "D_000") {
    e = pair("Delta", "Delta");
  } else if (name == "F_222") {
    const Covariant& f = catalog_3("f");
    const Covariant& t = catalog_3("T");
    e = pairing(catalog_3("Delta") * f * f, t * t);
  } else if (name == "Delta") {
    e = make_invariant(catalog_3("Delta").poly, "Delta", 4, 0);
  } else if (name == "s2") {
    e = pair("T", "f");
  } else {
    throw ArgumentError("unknown 3-qubit invariant: " + name);
  }
  e.name = name;
  std::lock_guard lock(mu);
  return memo.try_emplace(name, std::move(e)).first->second;
}

namespace {

/// D_000 (3/2 (B_200 + B_020 + B_002) - A_111^2) / 2 + F_222 / 8
Polynomial f7_delta_group() {
  auto g = [](const char* n) { return three_qubit_invariant(n).poly; };
  const Polynomial a = g("A_111");
  const Polynomial bsum = g("B_200") + g("B_020") + g("B_002");
  return scaled(g("D_000") * (scaled(bsum, 3, 2) - a * a), 1, 2) + scaled(g("F_222"), 1, 8);
}

}  // namespace

InvariantExpr grassl_f(int i) {
  auto g = [](const char* n) { return three_qubit_invariant(n).poly; };
  const Polynomial a = g("A_111");
  Polynomial p;
  switch (i) {
    case 1:
      p = a;
      break;
    case 2:
      p = a * a - g("B_200") - g("B_020");
      break;
    case 3:
      p = a * a - g("B_200") - g("B_002");
      break;
    case 4:
      p = a * a - g("B_020") - g("B_002");
      break;
    case 5: {
      const Polynomial bsum = g("B_200") + g("B_020") + g("B_002");
      p = a * a * a + scaled(g("C_111"), 3, 2) - scaled(a * bsum, 3, 2);
      break;
    }
    case 6:
      p = g("D_000");
      break;
    case 7: {
      const Polynomial c = g("C_111");
      p = scaled(c * c, 2) - scaled(g("B_200") * g("B_020") * g("B_002"), 4) +
          f7_delta_group().scaled(GaussianRational(kF7DeltaGroupScalar));
      break;
    }
    default:
      throw ArgumentError("grassl_f: index must be in 1..7");
  }
  return make_invariant(std::move(p), "f" + std::to_string(i));
}

InvariantExpr grassl_sum(std::span<const int> sigma, std::span<const int> tau, std::span<const int> rho) {
  const std::size_t n = sigma.size();
  if (tau.size() != n || rho.size() != n) throw ArgumentError("grassl_sum: permutations of unequal size");
  if (n == 0 || n > 6) throw ArgumentError("grassl_sum: permutation size must be in 1..6");
  for (auto perm : {sigma, tau, rho}) {
    std::vector<bool> seen(n + 1, false);
    for (int v : perm) {
      if (v < 1 || v > static_cast<int>(n) || seen[static_cast<std::size_t>(v)]) {
        throw ArgumentError("grassl_sum: not a permutation of 1..n");
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  auto amp = [](int i, int j, int k) { return static_cast<std::uint32_t>((i << 2) | (j << 1) | k); };
  std::vector<Polynomial::Term> terms;
  const std::uint32_t total = 1u << (3 * n);
  for (std::uint32_t code = 0; code < total; ++code) {
    auto bit = [&](std::size_t block, std::size_t p) { return static_cast<int>((code >> (block * n + p)) & 1u); };
    Monomial m;
    for (std::size_t p = 0; p < n; ++p) {
      m.multiply_var(VariableId::amp(amp(bit(0, p), bit(1, p), bit(2, p))), 1);
      const auto s = static_cast<std::size_t>(sigma[p] - 1);
      const auto t = static_cast<std::size_t>(tau[p] - 1);
      const auto r = static_cast<std::size_t>(rho[p] - 1);
      m.multiply_var(VariableId::amp_conj(amp(bit(0, s), bit(1, t), bit(2, r))), 1);
    }
    terms.emplace_back(std::move(m), GaussianRational(1));
  }
  const int deg = static_cast<int>(n);
  return make_invariant(Polynomial::from_terms(3, std::move(terms)), "f_sum", deg, deg);
}

namespace {

Polynomial a3(const char* two_bits, int last) {
  const auto idx = static_cast<std::uint32_t>(((two_bits[0] - '0') << 2) | ((two_bits[1] - '0') << 1) | last);
  return Polynomial::variable(3, VariableId::amp(idx));
}

/// [p, q] = a_{p0} a_{q1} - a_{p1} a_{q0}
Polynomial bracket(const char* p, const char* q) { return a3(p, 0) * a3(q, 1) - a3(p, 1) * a3(q, 0); }

/// {p, q} = a_{p0} abar_{q0} + a_{p1} abar_{q1}
Polynomial brace(const char* p, const char* q) {
  return a3(p, 0) * a3(q, 0).conjugate() + a3(p, 1) * a3(q, 1).conjugate();
}

Polynomial f7_bracket_sum() {
  struct Entry {
    long c;
    const char* b1;
    const char* b2;
    const char* c1;
    const char* c2;
  };
  static constexpr std::array<Entry, 12> entries{{
      {1, "11", "00", "00", "00"},
      {-1, "11", "00", "11", "11"},
      {1, "11", "01", "00", "01"},
      {1, "11", "10", "00", "10"},
      {2, "11", "10", "01", "11"},
      {-2, "01", "00", "10", "00"},
      {-1, "01", "00", "11", "01"},
      {-1, "10", "00", "11", "10"},
      {-1, "10", "01", "00", "00"},
      {-1, "10", "01", "01", "01"},
      {1, "10", "01", "10", "10"},
      {1, "10", "01", "11", "11"},
  }};
  Polynomial x(3);
  for (const auto& e : entries) x += (bracket(e.b1, e.b2) * brace(e.c1, e.c2)).scaled(GaussianRational(e.c));
  return x;
}

}  // namespace

InvariantExpr grassl_f_literal(int i) {
  const std::array<int, 1> id1{1};
  const std::array<int, 2> id2{1, 2};
  const std::array<int, 2> s12{2, 1};
  InvariantExpr e;
  switch (i) {
    case 1:
      e = grassl_sum(id1, id1, id1);
      break;
    case 2:
      e = grassl_sum(s12, s12, id2);
      break;
    case 3:
      e = grassl_sum(s12, id2, s12);
      break;
    case 4:
      e = grassl_sum(id2, s12, s12);
      break;
    case 5: {
      const std::array<int, 3> p12{2, 1, 3};
      const std::array<int, 3> p23{1, 3, 2};
      const std::array<int, 3> p13{3, 2, 1};
      e = grassl_sum(p12, p23, p13);
      break;
    }
    case 6:
      e = three_qubit_invariant("D_000");
      break;
    case 7: {
      const Polynomial x = f7_bracket_sum();
      e = make_invariant(three_qubit_invariant("Delta").poly.conjugate() * x * x);
      break;
    }
    default:
      throw ArgumentError("grassl_f_literal: index must be in 1..7");
  }
  e.name = "f" + std::to_string(i) + "_literal";
  return e;
}

std::vector<IdentityResult> grassl_identity_checks() {
  std::vector<IdentityResult> out;
  for (int i = 2; i <= 5; ++i) {
    IdentityResult r;
    r.name = "grassl_f" + std::to_string(i);
    r.residual = grassl_f_literal(i).poly - grassl_f(i).poly;
    r.holds = r.residual.is_zero();
    out.push_back(std::move(r));
  }
  return out;
}

IdentityResult f7_check() {
  auto g = [](const char* n) { return three_qubit_invariant(n).poly; };
  const Polynomial c = g("C_111");
  const Polynomial lhs = grassl_f_literal(7).poly - scaled(c * c, 2) +
                         scaled(g("B_200") * g("B_020") * g("B_002"), 4);
  const Polynomial group = f7_delta_group();
  IdentityResult r;
  r.name = "grassl_f7";
  r.scalar = proportionality(lhs, group);
  if (r.scalar) {
    r.residual = Polynomial(3);
    r.holds = r.scalar->is_real();
    r.note = "Delta-dependent group enters with factor " + r.scalar->to_string();
  } else {
    r.residual = lhs - group;
    r.note = "literal f7 - 2 C_111^2 + 4 B_200 B_020 B_002 is not a multiple of the Delta-dependent group";
  }
  return r;
}

std::vector<IdentityResult> syzygy_checks() {
  const Polynomial f1 = grassl_f(1).poly;
  const Polynomial f2 = grassl_f(2).poly;
  const Polynomial f3 = grassl_f(3).poly;
  const Polynomial f4 = grassl_f(4).poly;
  const Polynomial f5 = grassl_f(5).poly;
  const Polynomial delta = three_qubit_invariant("Delta").poly;
  const Polynomial delta_bar = delta.conjugate();
  const Polynomial s2 = three_qubit_invariant("s2").poly;
  const Polynomial s2_bar = s2.conjugate();
  const Polynomial abs_delta = delta * delta_bar;
  const Polynomial abs_s2 = s2 * s2_bar;
  const Polynomial f1sq = f1 * f1;

  std::vector<IdentityResult> out;

  // Degree (4,4): the |Delta|^2 and |s2|^2 coefficients absorb the scale of
  // Delta and s2.
  const Polynomial rest1 = scaled(f1 * f5, 8) - scaled(f4 * f2, 6) + scaled(f4 * f4, 3) + scaled(f2 * f2, 3) -
                           scaled(f4 * f3, 6) + f1sq * f1sq + scaled(f3 * f3, 3) - scaled(f3 * f2, 6);
  const std::array<Polynomial, 2> basis1{scaled(abs_delta, -3), scaled(abs_s2, -12)};
  IdentityResult r1;
  r1.name = "syzygy_44";
  GaussianRational u;
  GaussianRational v;
  const auto c1 = solve_combination(-rest1, basis1);
  if (c1) {
    u = (*c1)[0];
    v = (*c1)[1];
    r1.residual = rest1 + basis1[0].scaled(u) + basis1[1].scaled(v);
    r1.holds = r1.residual.is_zero() && u.is_real() && v.is_real() && sgn(u.re()) > 0 && sgn(v.re()) > 0;
    r1.scalar = u;
    r1.note = "|alpha|^2 = " + u.to_string() + ", |beta|^2 = " + v.to_string();
  } else {
    r1.residual = rest1 + basis1[0] + basis1[1];
    r1.note = "no scaling of Delta and s2 satisfies the relation";
  }
  out.push_back(r1);

  // Degree (6,6) with |Delta|^2, |s2|^2 fixed by the first relation; the
  // mixed terms Delta_bar s2^2 and Delta s2_bar^2 carry w and conj(w).
  const Polynomial f1_4 = f1sq * f1sq;
  const Polynomial abs_s2_u = abs_s2.scaled(v);
  const Polynomial abs_delta_u = abs_delta.scaled(u);
  const Polynomial rest2 = scaled(f4 * f1_4, -18) - scaled(f3 * f1_4, 18) - scaled(f2 * f1_4, 18) +
                           scaled(f1_4 * f1sq, 11) - scaled(abs_s2_u * f3, 36) - scaled(f4 * f3 * f2, 72) +
                           scaled(f4 * f2 * f1sq, 30) + scaled(f4 * f3 * f1sq, 30) - scaled(abs_s2_u * f2, 36) +
                           scaled(abs_s2_u * f1sq, 60) + scaled(f4 * f4 * f1sq, 3) + scaled(f3 * f3 * f1sq, 3) +
                           scaled(f3 * f2 * f1sq, 30) - scaled(abs_s2_u * f4, 36) + scaled(f2 * f2 * f1sq, 3) -
                           scaled(abs_delta_u * f1sq, 3) + scaled(f5 * f5, 16);
  const Polynomial m1 = scaled(delta_bar * s2 * s2, 18);
  const Polynomial m2 = scaled(delta * s2_bar * s2_bar, 18);
  const std::array<Polynomial, 2> basis2{m1, m2};
  IdentityResult r2;
  r2.name = "syzygy_66";
  const auto c2 = solve_combination(-rest2, basis2);
  if (c1 && c2) {
    const GaussianRational w = (*c2)[0];
    r2.residual = rest2 + m1.scaled(w) + m2.scaled(w.conj());
    // |w|^2 = |alpha|^2 |beta|^4 ties the fitted scales together.
    r2.holds = r2.residual.is_zero() && (*c2)[1] == w.conj() && w.norm() == u.re() * v.re() * v.re();
    r2.scalar = w;
    r2.note = "conj(alpha) beta^2 = " + w.to_string();
  } else {
    r2.residual = rest2 + m1 + m2;
    r2.note = "no admissible coefficient of Delta_bar s2^2";
  }
  out.push_back(r2);
  return out;
}

std::vector<GaussianRational> jacobian_point() {
  auto z = [](long re, long im) { return GaussianRational(mpq_class(re), mpq_class(im)); };
  return {z(3, 3), z(3, 3), z(3, 3), z(2, 1), z(3, 2), z(1, 2), z(2, 3), z(3, 1)};
}

std::vector<VariableId> jacobian_coordinates() {
  std::vector<VariableId> v;
  for (std::uint32_t i = 4; i < 8; ++i) v.push_back(VariableId::amp(i));
  for (std::uint32_t i = 3; i < 8; ++i) v.push_back(VariableId::amp_conj(i));
  return v;
}

namespace {

GaussianRational jacobian_with(const Polynomial& second_row, std::span<const VariableId> coordinates) {
  const Polynomial delta = three_qubit_invariant("Delta").poly;
  const Polynomial s2 = three_qubit_invariant("s2").poly;
  std::vector<Polynomial> rows{three_qubit_invariant("A_111").poly, second_row, grassl_f(3).poly, delta,
                               delta.conjugate(), s2, s2.conjugate()};
  for (VariableId v : coordinates) rows.push_back(Polynomial::variable(3, v));

  const auto point = jacobian_point();
  auto value = [&](VariableId v) -> GaussianRational {
    if (v.is_amp()) return point[v.index()];
    if (v.is_amp_conj()) return point[v.index()].conj();
    throw EvaluationError("Jacobian row contains an auxiliary variable");
  };
  std::vector<VariableId> vars;
  for (std::uint32_t i = 0; i < 8; ++i) vars.push_back(VariableId::amp(i));
  for (std::uint32_t i = 0; i < 8; ++i) vars.push_back(VariableId::amp_conj(i));

  std::vector<std::vector<GaussianRational>> m;
  for (const auto& row : rows) {
    std::vector<GaussianRational> r;
    for (VariableId v : vars) r.push_back(row.partial(v).evaluate_exact(value));
    m.push_back(std::move(r));
  }
  return determinant(std::move(m));
}

}  // namespace

GaussianRational jacobian_independence() { return jacobian_with(grassl_f(2).poly, jacobian_coordinates()); }

GaussianRational jacobian_with_coordinates(std::span<const VariableId> coordinates) {
  if (coordinates.size() != 9) throw DimensionError("the Jacobian needs nine coordinate rows");
  return jacobian_with(grassl_f(2).poly, coordinates);
}

GaussianRational jacobian_degenerate() {
  const Polynomial a = three_qubit_invariant("A_111").poly;
  return jacobian_with(a * a, jacobian_coordinates());
}

}  // namespace qinv
