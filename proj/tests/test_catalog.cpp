#include <gtest/gtest.h>

#include "qinv/catalog.hpp"
#include "qinv/errors.hpp"
#include "qinv/linalg.hpp"
#include "support.hpp"

using namespace qinv;

namespace {

Polynomial a3(std::uint32_t i) { return Polynomial::variable(3, VariableId::amp(i)); }

// b^2 - 4ac of det(x A0 + y A1), A0/A1 the two slices along the first qubit.
Polynomial slice_discriminant() {
  const Polynomial det0 = a3(0) * a3(3) - a3(1) * a3(2);
  const Polynomial det1 = a3(4) * a3(7) - a3(5) * a3(6);
  const Polynomial mid = a3(0) * a3(7) + a3(3) * a3(4) - a3(1) * a3(6) - a3(2) * a3(5);
  return mid * mid - (det0 * det1).scaled(4);
}

}  // namespace

TEST(Catalog, GroundForm) {
  EXPECT_EQ(ground_form(1).poly.size(), 2u);
  const Covariant f3 = ground_form(3);
  EXPECT_EQ(f3.poly.size(), 8u);
  EXPECT_EQ(f3.multidegree, (std::vector<int>{1, 1, 1}));
  const State ghz = State::from_support(3, std::vector<std::uint32_t>{0, 7});
  const AuxPoint ones(3, {Complex(1), Complex(1)});
  EXPECT_EQ(evaluate(f3, ghz, ones), Complex(2));
}

TEST(Catalog, BFamilyHasFullRank) {
  for (int k = 2; k <= 5; ++k) {
    std::vector<Polynomial> fam;
    for (const auto& d : b_family_indices(k)) fam.push_back(b_family(k, d).poly);
    EXPECT_EQ(fam.size(), std::size_t{1} << (k - 1));
    EXPECT_EQ(exact_rank(fam), std::size_t{1} << (k - 1)) << "k=" << k;
  }
}

TEST(Catalog, BFamilyRejectsOddZeroCount) {
  EXPECT_THROW(b_family(3, std::vector<int>{0, 2, 2}), ArgumentError);
  EXPECT_THROW(b_family(3, std::vector<int>{1, 2, 2}), ArgumentError);
  EXPECT_THROW(b_family(3, std::vector<int>{2, 2}), DimensionError);
}

TEST(Catalog, HxIsProportionalToB200) {
  const auto r = proportionality(b_family(3, std::vector<int>{2, 0, 0}).poly, catalog_3("Hx").poly);
  ASSERT_TRUE(r.has_value());
  EXPECT_FALSE(r->is_zero());
}

TEST(Catalog, HxAtGhz) {
  const State ghz = State::from_support(3, std::vector<std::uint32_t>{0, 7});
  const AuxPoint x{{Complex(2), Complex(3)}, {Complex(5), Complex(7)}, {Complex(11), Complex(13)}};
  EXPECT_EQ(evaluate(catalog_3("Hx"), ghz, x), Complex(6));
}

TEST(Catalog, DeltaIsTheHyperdeterminant) {
  const Polynomial disc = slice_discriminant();
  EXPECT_TRUE(proportionality(cayley_hyperdeterminant(), disc).has_value());
  const auto r = proportionality(catalog_3("Delta").poly, disc);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, GaussianRational(2));
  const State w = State::from_support(3, std::vector<std::uint32_t>{1, 2, 4});
  EXPECT_EQ(catalog_3("Delta").poly.evaluate(w), Complex(0));
}

TEST(Catalog, FourQubitDegrees) {
  struct Row {
    const char* name;
    int degree;
    std::vector<int> alpha;
  };
  const std::vector<Row> rows{{"B_0000", 2, {0, 0, 0, 0}}, {"B_2200", 2, {2, 2, 0, 0}},
                              {"C1_1111", 3, {1, 1, 1, 1}}, {"C2_1111", 3, {1, 1, 1, 1}},
                              {"C_3111", 3, {3, 1, 1, 1}},  {"C_1113", 3, {1, 1, 1, 3}},
                              {"D_4000", 4, {4, 0, 0, 0}},  {"D_0040", 4, {0, 0, 4, 0}},
                              {"D_2200", 4, {2, 2, 0, 0}},  {"E_3111", 5, {1, 1, 1, 1}}};
  for (const auto& r : rows) {
    const Covariant& c = catalog_4(r.name);
    EXPECT_EQ(c.amp_degree, r.degree) << r.name;
    EXPECT_EQ(c.multidegree, r.alpha) << r.name;
    EXPECT_FALSE(c.poly.is_zero()) << r.name;
    c.validate();
  }
  EXPECT_THROW(catalog_4("nope"), ArgumentError);
  EXPECT_THROW(catalog_3("Hw"), ArgumentError);
}

TEST(Catalog, B0000IsSloccInvariant) {
  Rng rng(31);
  const Polynomial& b = catalog_4("B_0000").poly;
  for (int t = 0; t < 10; ++t) {
    const State s = random_state(4, rng);
    const auto g = random_local(4, LocalGroup::SL2, rng);
    EXPECT_LT(qinv::testing::rel_diff(b.evaluate(s), b.evaluate(sl2_action(g, s))), 1e-9);
  }
}

TEST(Catalog, MultilinearCubicBasisSize) {
  for (int k = 2; k <= 5; ++k) {
    const long expect = ((1L << (k - 1)) + (k % 2 == 0 ? 1 : -1)) / 3;
    EXPECT_EQ(static_cast<long>(degree3_multilinear_basis(k).size()), expect) << "k=" << k;
  }
}

TEST(Catalog, NamesResolve) {
  for (int k : {3, 4}) {
    for (const auto& n : catalog_names(k)) EXPECT_NO_THROW(catalog(k, n)) << n;
  }
  EXPECT_EQ(catalog(5, "B_22200").multidegree, (std::vector<int>{2, 2, 2, 0, 0}));
}
