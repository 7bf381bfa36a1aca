#include <gtest/gtest.h>

#include "qinv/catalog.hpp"
#include "qinv/errors.hpp"
#include "qinv/linalg.hpp"
#include "qinv/unitary.hpp"
#include "support.hpp"

using namespace qinv;
using qinv::testing::rel_diff;

namespace {

Covariant power(const Covariant& c, int n) {
  Covariant out = c;
  for (int i = 1; i < n; ++i) out = out * c;
  return out;
}

// sum over index tuples of prod_m a_{i_m j_m k_m} conj(a_{i_s(m) j_t(m) k_r(m)})
Complex brute_force_sum(const State& s, const std::vector<int>& sigma, const std::vector<int>& tau,
                        const std::vector<int>& rho) {
  const std::size_t n = sigma.size();
  Complex total = 0;
  for (std::uint32_t code = 0; code < (1u << (3 * n)); ++code) {
    auto idx = [&](std::size_t pi, std::size_t pj, std::size_t pk) {
      const auto b = [&](std::size_t block, std::size_t p) { return (code >> (block * n + p)) & 1u; };
      return (b(0, pi) << 2) | (b(1, pj) << 1) | b(2, pk);
    };
    Complex term = 1;
    for (std::size_t m = 0; m < n; ++m) {
      term *= s[idx(m, m, m)];
      term *= std::conj(s[idx(static_cast<std::size_t>(sigma[m] - 1), static_cast<std::size_t>(tau[m] - 1),
                              static_cast<std::size_t>(rho[m] - 1))]);
    }
    total += term;
  }
  return total;
}

}  // namespace

TEST(Pairing, GroundFormGivesTheNorm) {
  for (int k = 1; k <= 4; ++k) {
    const Covariant f = ground_form(k);
    Polynomial norm(k);
    for (std::uint32_t i = 0; i < (1u << k); ++i) {
      norm += Polynomial::variable(k, VariableId::amp(i)) * Polynomial::variable(k, VariableId::amp_conj(i));
    }
    EXPECT_EQ(pairing(f, f).poly, norm);
  }
}

TEST(Pairing, PermanentWeightsOnPowers) {
  // one qubit: <f^n|f^n> = n! <f|f>^n
  const Covariant f = ground_form(1);
  const Polynomial a = pairing(f, f).poly;
  long fact = 1;
  for (int n = 1; n <= 5; ++n) {
    fact *= n;
    const Covariant fn = power(f, n);
    EXPECT_EQ(pairing(fn, fn).poly, a.pow(static_cast<unsigned>(n)).scaled(GaussianRational(fact)));
  }
}

TEST(Pairing, HermitianAndBidegree) {
  const Covariant& t = catalog_3("T");
  const Covariant& f = catalog_3("f");
  const InvariantExpr tf = pairing(t, f);
  EXPECT_EQ(tf.n1, 3);
  EXPECT_EQ(tf.n2, 1);
  EXPECT_EQ(pairing(f, t).poly, tf.poly.conjugate());
  EXPECT_TRUE(pairing(catalog_3("Hx"), catalog_3("Hy")).poly.is_zero());
}

TEST(Pairing, EvaluatorMatchesExpandedPolynomial) {
  Rng rng(41);
  const std::vector<std::pair<const char*, const char*>> pairs{{"Hx", "Hx"}, {"T", "T"}, {"T", "f"}, {"Delta", "Delta"}};
  for (auto [p, q] : pairs) {
    const InvariantExpr e = pairing(catalog_3(p), catalog_3(q));
    const PairingEvaluator ev(catalog_3(p), catalog_3(q));
    for (int t = 0; t < 5; ++t) {
      const State s = random_state(3, rng);
      EXPECT_LT(rel_diff(e.evaluate(s), ev(s)), 1e-12);
    }
  }
}

TEST(Pairing, UnitaryInvarianceOfSelfPairings) {
  Rng rng(42);
  for (const char* name : {"Hx", "T", "Delta"}) {
    const PairingEvaluator ev(catalog_3(name), catalog_3(name));
    for (int t = 0; t < 10; ++t) {
      const State s = random_state(3, rng);
      EXPECT_LT(rel_diff(ev(s), ev(sl2_action(random_local(3, LocalGroup::U2, rng), s))), 1e-10) << name;
    }
  }
}

TEST(Identities, FSquaredRelation) {
  for (int k = 2; k <= 4; ++k) {
    const IdentityResult r = f_squared_relation_check(k);
    EXPECT_TRUE(r.holds) << "k=" << k << " residual terms " << r.residual.size();
  }
}

TEST(Identities, GrasslSumsAgainstBruteForce) {
  Rng rng(43);
  struct Row {
    int i;
    std::vector<int> s, t, r;
  };
  const std::vector<Row> rows{{1, {1}, {1}, {1}},
                              {2, {2, 1}, {2, 1}, {1, 2}},
                              {3, {2, 1}, {1, 2}, {2, 1}},
                              {4, {1, 2}, {2, 1}, {2, 1}},
                              {5, {2, 1, 3}, {1, 3, 2}, {3, 2, 1}}};
  for (int t = 0; t < 5; ++t) {
    const State s = random_state(3, rng);
    for (const auto& row : rows) {
      EXPECT_LT(rel_diff(brute_force_sum(s, row.s, row.t, row.r), grassl_f(row.i).evaluate(s)), 1e-12) << row.i;
    }
  }
}

TEST(Identities, GrasslExact) {
  EXPECT_EQ(grassl_f_literal(1).poly, grassl_f(1).poly);
  for (const auto& r : grassl_identity_checks()) EXPECT_TRUE(r.holds) << r.name;
  const std::array<int, 2> bad{1, 1};
  EXPECT_THROW(grassl_sum(bad, bad, bad), ArgumentError);
  EXPECT_THROW(grassl_f(8), ArgumentError);
}

TEST(Identities, F7UpToRecordedScalar) {
  const IdentityResult r = f7_check();
  ASSERT_TRUE(r.scalar.has_value()) << r.note;
  EXPECT_EQ(*r.scalar, GaussianRational(kF7DeltaGroupScalar));
  EXPECT_EQ(grassl_f_literal(7).poly, grassl_f(7).poly);
}

TEST(Identities, F7IsNotRealValued) {
  const State s(3, {Complex(0.3, 0.1), Complex(0.2), Complex(0, 0.4), Complex(0.1, -0.2), Complex(0.5),
                    Complex(0.1, 0.3), Complex(-0.2, 0.1), Complex(0.4)});
  const Complex v = grassl_f(7).evaluate(s);
  EXPECT_GT(std::abs(v.imag()), 1e-6 * std::abs(v));
}

TEST(Identities, Syzygies) {
  const auto rs = syzygy_checks();
  ASSERT_EQ(rs.size(), 2u);
  for (const auto& r : rs) EXPECT_TRUE(r.holds) << r.name << ": " << r.note;
}

TEST(Bases, LutAndLsutDegreeFour) {
  const std::array<std::size_t, 3> lut{2, 4, 8};
  const std::array<std::size_t, 3> lsut{6, 8, 20};
  for (int k = 2; k <= 4; ++k) {
    const auto u = static_cast<std::size_t>(k - 2);
    std::vector<Polynomial> p;
    for (const auto& e : lut_degree4_basis(k)) p.push_back(e.poly);
    EXPECT_EQ(p.size(), lut[u]);
    EXPECT_EQ(exact_rank(p), lut[u]);
    p.clear();
    for (const auto& e : lsut_degree4_basis(k)) p.push_back(e.poly);
    EXPECT_EQ(p.size(), lsut[u]);
    EXPECT_EQ(exact_rank(p), lsut[u]);
  }
}

TEST(Jacobian, NonzeroAtReferencePoint) {
  EXPECT_FALSE(jacobian_independence().is_zero());
  EXPECT_TRUE(jacobian_degenerate().is_zero());
}

TEST(Jacobian, AllAmplitudeCoordinatesGiveZero) {
  std::vector<VariableId> rows;
  for (std::uint32_t i = 0; i < 8; ++i) rows.push_back(VariableId::amp(i));
  rows.push_back(VariableId::amp_conj(0));
  EXPECT_TRUE(jacobian_with_coordinates(rows).is_zero());
  EXPECT_THROW(jacobian_with_coordinates(std::span(rows).first(8)), DimensionError);
}
