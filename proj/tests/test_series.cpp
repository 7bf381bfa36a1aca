#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "qinv/errors.hpp"
#include "qinv/hilbert.hpp"
#include "qinv/series.hpp"

using namespace qinv;
using namespace qinv::hilbert;

TEST(LaurentPoly, ArithmeticAndConstantTerm) {
  LaurentPoly p(2), q(2);
  p.add(std::vector<int>{1, -1}, 3);
  p.add(std::vector<int>{0, 0}, 2);
  q.add(std::vector<int>{-1, 1}, 5);
  q.add(std::vector<int>{0, 0}, -1);
  const LaurentPoly r = p * q;
  EXPECT_EQ(r.constant_term(), 3 * 5 + 2 * -1);
  EXPECT_EQ(p.constant_term_of_product(q), r.constant_term());
  EXPECT_EQ(r.coefficient(std::vector<int>{1, -1}), -3);
  EXPECT_EQ(r.coefficient(std::vector<int>{-1, 1}), 10);
  const auto key = p.pack(std::vector<int>{-7, 12});
  EXPECT_EQ(p.unpack(key), (std::vector<int>{-7, 12}));
}

TEST(LaurentPoly, WeylPrefactorOneVariable) {
  // (1 - u^2)(1 - u^-2) = 2 - u^2 - u^-2
  const LaurentPoly w = weyl_prefactor(1, 0, 1);
  EXPECT_EQ(w.size(), 3u);
  EXPECT_EQ(w.constant_term(), 2);
  EXPECT_EQ(w.coefficient(std::vector<int>{2}), -1);
  EXPECT_EQ(w.coefficient(std::vector<int>{-2}), -1);
}

TEST(ConstantTerm, GeometricSeries) {
  // CT_u 1 / ((1 - z u)(1 - z u^-1)) = sum_n z^{2n}
  ConstantTermSpec spec;
  spec.num_vars = 1;
  spec.prefactor = LaurentPoly(1);
  spec.prefactor.add(std::vector<int>{0}, 1);
  spec.factors = {{1, 0, {1}, 1}, {1, 0, {-1}, 1}};
  const auto t = constant_term_series(spec, 8, 0);
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(t[static_cast<std::size_t>(n)][0], n % 2 == 0 ? 1 : 0);
}

TEST(ConstantTerm, Errors) {
  ConstantTermSpec spec;
  spec.num_vars = 1;
  spec.prefactor = LaurentPoly(1);
  spec.prefactor.add(std::vector<int>{0}, 1);
  spec.factors = {{0, 0, {1}, 1}};
  EXPECT_THROW(constant_term_series(spec, 4, 0), SpecificationError);
  spec.factors = {{1, 0, {1}, 1}, {1, 0, {-1}, 1}};
  spec.divisor = 3;
  EXPECT_THROW(constant_term_series(spec, 4, 0), ConsistencyError);
  spec.divisor = 1;
  spec.factors = {{1, 0, {100}, 1}};
  EXPECT_THROW(constant_term_series(spec, 4, 0), SpecificationError);
}

TEST(ConstantTerm, AgreesWithCharacterRoute) {
  for (int k = 2; k <= 3; ++k) {
    EXPECT_EQ(lut_coeffs_ct(k, 10), hilbert_lut_coeffs(k, 10)) << "k=" << k;
    EXPECT_EQ(slocc_coeffs_ct(k, 10), hilbert_slocc_coeffs(k, 10)) << "k=" << k;
    EXPECT_EQ(lsut_coeffs_ct(k, 5, 5), hilbert_lsut_coeffs(k, 5, 5)) << "k=" << k;
  }
  EXPECT_EQ(slocc_coeffs_ct(4, 8), hilbert_slocc_coeffs(4, 8));
  EXPECT_EQ(lut_coeffs_ct(4, 6), hilbert_lut_coeffs(4, 6));
}

TEST(ClosedForm, ExpansionOfSimpleForms) {
  ClosedForm f;
  f.numerator[{0, 0}] = 1;
  f.denominator = {{1, 0, 2}};
  EXPECT_EQ(expand_closed_form(f, 5), (std::vector<std::int64_t>{1, 2, 3, 4, 5, 6}));
  ClosedForm g;
  g.num_vars = 2;
  g.numerator[{0, 0}] = 1;
  g.numerator[{1, 1}] = -1;
  g.denominator = {{1, 1, 1}};
  const auto t = expand_closed_form(g, 3, 3);
  EXPECT_EQ(t[0][0], 1);
  EXPECT_EQ(t[1][1], 0);
  EXPECT_EQ(t[2][2], 0);
  EXPECT_EQ(t[1][0], 0);
}

TEST(ClosedForm, LoadFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "qinv_form_test.json";
  {
    std::ofstream out(path);
    out << R"({"variables": ["z", "zbar"], "symmetric": true,
               "numerator": {"0,0": 1, "2,1": 3},
               "denominator": [{"exponent": [1, 1], "multiplicity": 2}]})";
  }
  const ClosedForm f = load_closed_form(path.string());
  EXPECT_EQ(f.num_vars, 2);
  EXPECT_EQ(f.numerator.at({2, 1}), 3);
  EXPECT_EQ(f.numerator.at({1, 2}), 3);
  ASSERT_EQ(f.denominator.size(), 1u);
  EXPECT_EQ(f.denominator[0].multiplicity, 2);
  {
    std::ofstream out(path);
    out << R"({"variables": ["z"], "numerator": {"0": 1}, "denominator": [{"exponent": [], "multiplicity": 1}]})";
  }
  EXPECT_THROW(load_closed_form(path.string()), Error);
  std::filesystem::remove(path);
  EXPECT_THROW(load_closed_form(path.string()), Error);
}

TEST(ClosedForm, ShippedTablesLoad) {
  const ClosedForm lu = lut4_closed_form();
  EXPECT_EQ(lu.num_vars, 1);
  int mult = 0;
  for (const auto& d : lu.denominator) mult += d.multiplicity;
  EXPECT_EQ(mult, 19);
  const ClosedForm lsu = lsut4_closed_form();
  EXPECT_EQ(lsu.num_vars, 2);
}
