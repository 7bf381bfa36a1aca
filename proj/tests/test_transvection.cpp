#include <gtest/gtest.h>

#include <numeric>

#include "qinv/catalog.hpp"
#include "qinv/errors.hpp"
#include "qinv/transvection.hpp"
#include "support.hpp"

using namespace qinv;

namespace {

// Omega^n = sum_i C(n,i) (-1)^i d/dx'_0^{n-i} d/dx'_1^i d/dx''_0^i d/dx''_1^{n-i},
// phi and psi differentiated separately.
Polynomial binomial_transvectant(const Covariant& phi, const Covariant& psi, const std::vector<int>& eps) {
  const int k = phi.k();
  Polynomial total(k);
  std::vector<int> i(static_cast<std::size_t>(k), 0);
  while (true) {
    Polynomial p = phi.poly, q = psi.poly;
    mpz_class coef = 1;
    for (int j = 0; j < k; ++j) {
      const int n = eps[static_cast<std::size_t>(j)], r = i[static_cast<std::size_t>(j)];
      mpz_class c;
      mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
      coef *= (r % 2 ? -c : c);
      for (int s = 0; s < n - r; ++s) p = p.partial(VariableId::aux(j, 0));
      for (int s = 0; s < r; ++s) p = p.partial(VariableId::aux(j, 1));
      for (int s = 0; s < r; ++s) q = q.partial(VariableId::aux(j, 0));
      for (int s = 0; s < n - r; ++s) q = q.partial(VariableId::aux(j, 1));
    }
    total += (p * q).scaled(GaussianRational(mpq_class(coef)));
    int j = 0;
    while (j < k && ++i[static_cast<std::size_t>(j)] > eps[static_cast<std::size_t>(j)]) i[static_cast<std::size_t>(j++)] = 0;
    if (j == k) break;
  }
  return total;
}

std::vector<std::vector<int>> admissible(const Covariant& a, const Covariant& b) {
  std::vector<std::vector<int>> out{{}};
  for (int j = 0; j < a.k(); ++j) {
    const int m = std::min(a.multidegree[static_cast<std::size_t>(j)], b.multidegree[static_cast<std::size_t>(j)]);
    std::vector<std::vector<int>> next;
    for (const auto& e : out) {
      for (int v = 0; v <= m; ++v) {
        next.push_back(e);
        next.back().push_back(v);
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST(Transvection, TwoQubitHyperdeterminant) {
  const Covariant f = ground_form(2);
  const std::vector<int> eps{1, 1};
  const Covariant b = transvect(f, f, eps);
  auto a = [](std::uint32_t i) { return Polynomial::variable(2, VariableId::amp(i)); };
  EXPECT_EQ(b.poly, (a(0) * a(3) - a(1) * a(2)).scaled(2));
  EXPECT_EQ(b.amp_degree, 2);
  EXPECT_EQ(b.multidegree, (std::vector<int>{0, 0}));
}

TEST(Transvection, TrivialCases) {
  const Covariant f1 = ground_form(1);
  EXPECT_TRUE(transvect(f1, f1, std::vector<int>{1}).poly.is_zero());
  const Covariant f3 = ground_form(3);
  EXPECT_EQ(transvect(f3, f3, std::vector<int>{0, 0, 0}).poly, f3.poly * f3.poly);
}

TEST(Transvection, MatchesBinomialOracleOnCatalogPairs) {
  const Covariant& f = catalog_3("f");
  const Covariant& hx = catalog_3("Hx");
  const Covariant& t = catalog_3("T");
  const std::vector<std::pair<const Covariant*, const Covariant*>> pairs{{&f, &f}, {&f, &hx}, {&hx, &t}, {&t, &f}};
  for (auto [a, b] : pairs) {
    for (const auto& eps : admissible(*a, *b)) {
      const Covariant c = transvect(*a, *b, eps);
      EXPECT_EQ(c.poly, binomial_transvectant(*a, *b, eps));
      EXPECT_EQ(c.amp_degree, a->amp_degree + b->amp_degree);
      for (std::size_t j = 0; j < 3; ++j) {
        EXPECT_EQ(c.multidegree[j], a->multidegree[j] + b->multidegree[j] - 2 * eps[j]);
      }
      c.validate();
    }
  }
}

TEST(Transvection, SignSymmetry) {
  const Covariant& f = catalog_4("f");
  const Covariant& b = catalog_4("B_2200");
  for (const auto& eps : admissible(f, b)) {
    const int sum = std::accumulate(eps.begin(), eps.end(), 0);
    const Polynomial lhs = transvect(f, b, eps).poly;
    const Polynomial rhs = transvect(b, f, eps).poly;
    EXPECT_EQ(lhs, sum % 2 ? -rhs : rhs);
  }
}

TEST(Transvection, CommutesWithQubitRelabelling) {
  // swapping slots 1 and 2 of both operands swaps them in the result
  auto swap12 = [](const Covariant& c) {
    Covariant out = c;
    out.poly = c.poly.map_variables([](VariableId v) {
      if (v.is_aux()) {
        const int s = v.slot() == 0 ? 1 : v.slot() == 1 ? 0 : v.slot();
        return VariableId::aux(s, v.component(), v.copy());
      }
      std::uint32_t i = v.index();
      const std::uint32_t b0 = (i >> 2) & 1, b1 = (i >> 1) & 1;
      i = (i & 1u) | (b0 << 1) | (b1 << 2);
      return v.is_amp() ? VariableId::amp(i) : VariableId::amp_conj(i);
    });
    std::swap(out.multidegree[0], out.multidegree[1]);
    return out;
  };
  const Covariant& f = catalog_3("f");
  const Covariant& hz = catalog_3("Hz");
  for (const auto& eps : admissible(f, hz)) {
    std::vector<int> swapped = eps;
    std::swap(swapped[0], swapped[1]);
    EXPECT_EQ(swap12(transvect(f, hz, eps)).poly, transvect(swap12(f), swap12(hz), swapped).poly);
  }
}

TEST(Transvection, NumericEquivariance) {
  Rng rng(21);
  const Covariant& f = catalog_3("f");
  const Covariant& hy = catalog_3("Hy");
  const std::vector<Covariant> outputs{transvect(f, hy, std::vector<int>{0, 1, 0}),
                                       transvect(hy, hy, std::vector<int>{0, 1, 0}), catalog_3("T")};
  for (int t = 0; t < 20; ++t) {
    const State s = random_state(3, rng);
    const auto g = random_local(3, LocalGroup::SL2, rng);
    const AuxPoint x = qinv::testing::random_aux(3, rng);
    for (const auto& c : outputs) {
      EXPECT_LT(qinv::testing::rel_diff(evaluate(c, s, x), evaluate(c, sl2_action(g, s), transform_aux(g, x))), 1e-8);
    }
  }
}

TEST(Transvection, EvenKFullTransvectantIsSloccInvariant) {
  Rng rng(22);
  for (int k : {2, 4}) {
    const Covariant f = ground_form(k);
    const Covariant b = transvect(f, f, std::vector<int>(static_cast<std::size_t>(k), 1));
    for (int t = 0; t < 10; ++t) {
      const State s = random_state(k, rng);
      const auto g = random_local(k, LocalGroup::SL2, rng);
      EXPECT_LT(qinv::testing::rel_diff(b.poly.evaluate(s), b.poly.evaluate(sl2_action(g, s))), 1e-8);
    }
  }
}

TEST(Transvection, Errors) {
  const Covariant f = ground_form(2);
  EXPECT_THROW(transvect(f, f, std::vector<int>{2, 0}), DegreeError);
  EXPECT_THROW(transvect(f, ground_form(3), std::vector<int>{0, 0}), DimensionError);
  EXPECT_THROW(transvect(f, f, std::vector<int>{0}), DimensionError);
}
