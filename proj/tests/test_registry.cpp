#include <gtest/gtest.h>

#include <set>

#include "qinv/errors.hpp"
#include "qinv/registry.hpp"
#include "qinv/unitary.hpp"
#include "support.hpp"

using namespace qinv;

TEST(Registry, NamesAreUnique) {
  for (int k = 2; k <= 6; ++k) {
    std::set<std::string> seen;
    for (const auto& info : registered_invariants(k)) EXPECT_TRUE(seen.insert(info.name).second) << info.name;
  }
}

TEST(Registry, KnownEntries) {
  EXPECT_EQ(invariant_info(3, "B_200").group, InvariantGroup::LUT);
  EXPECT_EQ(invariant_info(3, "Det").group, InvariantGroup::SLOCC);
  EXPECT_EQ(invariant_info(3, "s2").n1, 3);
  EXPECT_EQ(invariant_info(3, "s2").n2, 1);
  EXPECT_EQ(invariant_info(4, "B_0000").group, InvariantGroup::SLOCC);
  EXPECT_EQ(invariant_info(4, "<E3111|E3111>").n1, 5);
  EXPECT_EQ(invariant_info(2, "B").group, InvariantGroup::LUT);
  EXPECT_THROW(invariant_info(3, "nope"), ArgumentError);
  EXPECT_THROW(registered_invariants(7), DimensionError);
}

TEST(Registry, GhzValues) {
  const State ghz = State::from_support(3, std::vector<std::uint32_t>{0, 7}).normalized();
  EXPECT_NEAR(std::abs(invariant_evaluator(3, "A")(ghz) - Complex(1)), 0, 1e-14);
  EXPECT_NEAR(std::abs(invariant_evaluator(3, "f6")(ghz) - Complex(0.25)), 0, 1e-14);
  EXPECT_NEAR(std::abs(invariant_evaluator(3, "B_200")(ghz) - Complex(0.25)), 0, 1e-14);
}

TEST(Registry, EvaluatorMatchesSymbolicForm) {
  Rng rng(61);
  const State s = random_state(3, rng);
  for (int i = 1; i <= 7; ++i) {
    const std::string n = "f" + std::to_string(i);
    EXPECT_LT(qinv::testing::rel_diff(invariant_evaluator(3, n)(s), grassl_f(i).evaluate(s)), 1e-12) << n;
  }
}

TEST(Registry, InvarianceUnderMatchingGroup) {
  Rng rng(62);
  for (int k = 2; k <= 4; ++k) {
    for (const auto& info : registered_invariants(k)) {
      const auto fn = invariant_evaluator(k, info.name);
      const LocalGroup g = info.group == InvariantGroup::LUT    ? LocalGroup::U2
                           : info.group == InvariantGroup::LSUT ? LocalGroup::SU2
                                                                : LocalGroup::SL2;
      for (int t = 0; t < 5; ++t) {
        const State s = random_state(k, rng);
        const double tol = g == LocalGroup::SL2 ? 1e-8 : 1e-9;
        EXPECT_LT(qinv::testing::rel_diff(fn(s), fn(sl2_action(random_local(k, g, rng), s))), tol)
            << "k=" << k << " " << info.name;
      }
    }
  }
}

TEST(Registry, LsutEntriesAreNotLutInvariant) {
  Rng rng(63);
  const auto fn = invariant_evaluator(3, "s2");
  const State s = random_state(3, rng);
  auto g = random_local(3, LocalGroup::SU2, rng);
  const Complex phase = std::polar(1.0, 0.7);
  for (auto& m : g[0].m) m *= phase;
  EXPECT_GT(qinv::testing::rel_diff(fn(s), fn(sl2_action(g, s))), 1e-3);
}
