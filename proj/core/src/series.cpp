#include "qinv/series.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qinv/errors.hpp"

#ifndef QINV_SOURCE_DATA_DIR
#define QINV_SOURCE_DATA_DIR "data"
#endif
#ifndef QINV_INSTALL_DATA_DIR
#define QINV_INSTALL_DATA_DIR "/usr/local/share/qinv"
#endif

namespace qinv::hilbert {

namespace {

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ConsistencyError("series coefficient overflow");
  return r;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ConsistencyError("series coefficient overflow");
  return r;
}

constexpr int kOffset = 128;

}  // namespace

LaurentPoly::LaurentPoly(int num_vars) : num_vars_(num_vars), zero_key_(0) {
  if (num_vars < 0 || num_vars > kMaxVars) throw ArgumentError("LaurentPoly supports at most 7 variables");
  for (int i = 0; i < num_vars; ++i) zero_key_ |= std::uint64_t{kOffset} << (8 * i);
}

std::uint64_t LaurentPoly::pack(std::span<const int> exponents) const {
  if (static_cast<int>(exponents.size()) != num_vars_) throw DimensionError("Laurent exponent length mismatch");
  std::uint64_t key = 0;
  for (int i = 0; i < num_vars_; ++i) {
    const int e = exponents[static_cast<std::size_t>(i)];
    if (e < -127 || e > 127) throw SpecificationError("Laurent exponent out of range");
    key |= static_cast<std::uint64_t>(e + kOffset) << (8 * i);
  }
  return key;
}

std::vector<int> LaurentPoly::unpack(std::uint64_t key) const {
  std::vector<int> e(static_cast<std::size_t>(num_vars_));
  for (int i = 0; i < num_vars_; ++i) e[static_cast<std::size_t>(i)] = static_cast<int>((key >> (8 * i)) & 0xffu) - kOffset;
  return e;
}

void LaurentPoly::add(std::span<const int> exponents, std::int64_t coef) {
  if (coef == 0) return;
  const std::uint64_t key = pack(exponents);
  auto& c = terms_[key];
  c = add_checked(c, coef);
  if (c == 0) terms_.erase(key);
}

std::int64_t LaurentPoly::coefficient(std::span<const int> exponents) const {
  auto it = terms_.find(pack(exponents));
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t LaurentPoly::constant_term() const {
  auto it = terms_.find(zero_key_);
  return it == terms_.end() ? 0 : it->second;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.num_vars_ != q.num_vars_) throw DimensionError("Laurent product: variable counts differ");
  LaurentPoly r(p.num_vars_);
  for (const auto& [kp, cp] : p.terms_) {
    for (const auto& [kq, cq] : q.terms_) {
      auto& c = r.terms_[kp + kq - p.zero_key_];
      c = add_checked(c, mul_checked(cp, cq));
    }
  }
  absl::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

std::int64_t LaurentPoly::constant_term_of_product(const LaurentPoly& other) const {
  std::int64_t total = 0;
  for (const auto& [key, c] : terms_) {
    auto it = other.terms_.find(2 * zero_key_ - key);
    if (it != other.terms_.end()) total = add_checked(total, mul_checked(c, it->second));
  }
  return total;
}

void LaurentPoly::add_shifted(const LaurentPoly& other, std::uint64_t shift, std::int64_t c) {
  for (const auto& [key, v] : other.terms_) {
    auto& slot = terms_[key + shift];
    slot = add_checked(slot, mul_checked(c, v));
  }
  absl::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

LaurentSeriesTruncation::LaurentSeriesTruncation(int num_vars, int cutoff_z, int cutoff_zbar)
    : vars_(num_vars), n1_(cutoff_z), n2_(cutoff_zbar) {
  if (cutoff_z < 0 || cutoff_zbar < 0) throw ArgumentError("negative series cutoff");
  grid_.assign(static_cast<std::size_t>(n1_ + 1) * static_cast<std::size_t>(n2_ + 1), LaurentPoly(num_vars));
  const std::vector<int> zero(static_cast<std::size_t>(num_vars), 0);
  grid_[0].add(zero, 1);
}

void LaurentSeriesTruncation::divide_by(const SeriesFactor& factor) {
  if (factor.z_order < 0 || factor.zbar_order < 0 || (factor.z_order == 0 && factor.zbar_order == 0)) {
    throw SpecificationError(
        "denominator factor must have positive z or zbar order to admit a truncated expansion");
  }
  if (static_cast<int>(factor.exponents.size()) != vars_) throw DimensionError("factor exponent length mismatch");
  // Shift as a signed packed delta; valid while every field stays in range.
  std::int64_t delta = 0;
  for (int i = 0; i < vars_; ++i) delta += static_cast<std::int64_t>(factor.exponents[static_cast<std::size_t>(i)]) << (8 * i);
  const auto shift = static_cast<std::uint64_t>(delta);
  for (int rep = 0; rep < factor.multiplicity; ++rep) {
    for (int i = factor.z_order; i <= n1_; ++i) {
      for (int j = factor.zbar_order; j <= n2_; ++j) {
        coefficient(i, j).add_shifted(coefficient(i - factor.z_order, j - factor.zbar_order), shift, 1);
      }
    }
  }
}

std::vector<std::vector<std::int64_t>> constant_term_series(const ConstantTermSpec& spec, int max_z,
                                                            int max_zbar) {
  int max_exp = 0;
  for (const auto& f : spec.factors) {
    if (f.z_order < 0 || f.zbar_order < 0 || (f.z_order == 0 && f.zbar_order == 0)) {
      throw SpecificationError(
          "denominator factor must have positive z or zbar order to admit a truncated expansion");
    }
    for (int e : f.exponents) max_exp = std::max(max_exp, std::abs(e));
  }
  if (max_exp * (max_z + max_zbar) > 120) throw SpecificationError("series cutoff too large for packed exponents");
  if (spec.divisor == 0) throw SpecificationError("zero divisor");

  LaurentSeriesTruncation series(spec.num_vars, max_z, max_zbar);
  for (const auto& f : spec.factors) series.divide_by(f);

  std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(max_z + 1),
                                             std::vector<std::int64_t>(static_cast<std::size_t>(max_zbar + 1)));
  for (int i = 0; i <= max_z; ++i) {
    for (int j = 0; j <= max_zbar; ++j) {
      const std::int64_t ct = spec.prefactor.constant_term_of_product(series.coefficient(i, j));
      if (ct % spec.divisor != 0) {
        throw ConsistencyError("constant term " + std::to_string(ct) + " at order (" + std::to_string(i) + "," +
                               std::to_string(j) + ") is not divisible by " + std::to_string(spec.divisor));
      }
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = ct / spec.divisor;
    }
  }
  return out;
}

LaurentPoly weyl_prefactor(int num_vars, int first, int slots) {
  LaurentPoly p(num_vars);
  std::vector<int> zero(static_cast<std::size_t>(num_vars), 0);
  p.add(zero, 1);
  for (int s = 0; s < slots; ++s) {
    // (1 - u^2)(1 - u^-2) = 2 - u^2 - u^-2
    LaurentPoly factor(num_vars);
    std::vector<int> e = zero;
    factor.add(e, 2);
    e[static_cast<std::size_t>(first + s)] = 2;
    factor.add(e, -1);
    e[static_cast<std::size_t>(first + s)] = -2;
    factor.add(e, -1);
    p = p * factor;
  }
  return p;
}

namespace {

std::vector<std::vector<int>> sign_vectors(int k) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> a(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) a[static_cast<std::size_t>(j)] = (mask >> j) & 1u ? -1 : 1;
    out.push_back(std::move(a));
  }
  return out;
}

void check_k(int k) {
  if (k < 1 || k > LaurentPoly::kMaxVars - 1) throw ArgumentError("constant-term route supports 1 <= k <= 6");
}

}  // namespace

ConstantTermSpec lut_spec(int k) {
  check_k(k);
  ConstantTermSpec spec;
  spec.num_vars = k + 1;
  for (int a : {1, -1}) {
    for (const auto& alpha : sign_vectors(k)) {
      SeriesFactor f;
      f.z_order = 1;
      f.exponents.push_back(a);
      f.exponents.insert(f.exponents.end(), alpha.begin(), alpha.end());
      spec.factors.push_back(std::move(f));
    }
  }
  spec.prefactor = weyl_prefactor(k + 1, 1, k);
  spec.divisor = std::int64_t{1} << k;
  return spec;
}

ConstantTermSpec lsut_spec(int k) {
  check_k(k);
  ConstantTermSpec spec;
  spec.num_vars = k;
  for (const auto& alpha : sign_vectors(k)) {
    spec.factors.push_back({1, 0, alpha, 1});
    spec.factors.push_back({0, 1, alpha, 1});
  }
  spec.prefactor = weyl_prefactor(k, 0, k);
  spec.divisor = std::int64_t{1} << k;
  return spec;
}

ConstantTermSpec slocc_spec(int k) {
  check_k(k);
  ConstantTermSpec spec;
  spec.num_vars = k;
  for (const auto& alpha : sign_vectors(k)) spec.factors.push_back({1, 0, alpha, 1});
  spec.prefactor = weyl_prefactor(k, 0, k);
  spec.divisor = std::int64_t{1} << k;
  return spec;
}

std::vector<std::int64_t> lut_coeffs_ct(int k, int max_degree) {
  const auto table = constant_term_series(lut_spec(k), max_degree, 0);
  std::vector<std::int64_t> out;
  for (const auto& row : table) out.push_back(row[0]);
  return out;
}

std::vector<std::vector<std::int64_t>> lsut_coeffs_ct(int k, int max_n1, int max_n2) {
  return constant_term_series(lsut_spec(k), max_n1, max_n2);
}

std::vector<std::int64_t> slocc_coeffs_ct(int k, int max_degree) {
  const auto table = constant_term_series(slocc_spec(k), max_degree, 0);
  std::vector<std::int64_t> out;
  for (const auto& row : table) out.push_back(row[0]);
  return out;
}

std::vector<std::vector<std::int64_t>> expand_closed_form(const ClosedForm& form, int max1, int max2) {
  if (max1 < 0 || max2 < 0) throw ArgumentError("negative expansion order");
  std::vector<std::vector<std::int64_t>> s(static_cast<std::size_t>(max1 + 1),
                                           std::vector<std::int64_t>(static_cast<std::size_t>(max2 + 1), 0));
  for (const auto& [ij, c] : form.numerator) {
    if (ij.first <= max1 && ij.second <= max2 && ij.first >= 0 && ij.second >= 0) {
      s[static_cast<std::size_t>(ij.first)][static_cast<std::size_t>(ij.second)] += c;
    }
  }
  for (const auto& f : form.denominator) {
    if (f.e1 < 0 || f.e2 < 0 || (f.e1 == 0 && f.e2 == 0)) {
      throw SpecificationError("closed-form denominator factor must have positive degree");
    }
    for (int rep = 0; rep < f.multiplicity; ++rep) {
      for (int i = f.e1; i <= max1; ++i) {
        for (int j = f.e2; j <= max2; ++j) {
          auto& cell = s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          cell = add_checked(cell, s[static_cast<std::size_t>(i - f.e1)][static_cast<std::size_t>(j - f.e2)]);
        }
      }
    }
  }
  return s;
}

std::vector<std::int64_t> expand_closed_form(const ClosedForm& form, int max_degree) {
  const auto t = expand_closed_form(form, max_degree, 0);
  std::vector<std::int64_t> out;
  for (const auto& row : t) out.push_back(row[0]);
  return out;
}

ClosedForm lut3_closed_form() {
  ClosedForm c;
  c.numerator = {{{0, 0}, 1}, {{24, 0}, -1}};
  c.denominator = {{2, 0, 1}, {4, 0, 3}, {6, 0, 1}, {8, 0, 1}, {12, 0, 1}};
  return c;
}

ClosedForm lsut3_closed_form() {
  ClosedForm c;
  c.num_vars = 2;
  c.numerator = {{{0, 0}, 1}, {{2, 2}, 1}, {{3, 3}, 1}, {{5, 5}, 1}};
  c.denominator = {{1, 1, 1}, {4, 0, 1}, {2, 2, 2}, {0, 4, 1}, {1, 3, 1}, {3, 1, 1}};
  return c;
}

ClosedForm slocc3_closed_form() {
  ClosedForm c;
  c.numerator = {{{0, 0}, 1}};
  c.denominator = {{4, 0, 1}};
  return c;
}

ClosedForm slocc4_closed_form() {
  ClosedForm c;
  c.numerator = {{{0, 0}, 1}};
  c.denominator = {{2, 0, 1}, {4, 0, 2}, {6, 0, 1}};
  return c;
}

ClosedForm slocc4_linear_factor_form() {
  ClosedForm c;
  c.numerator = {{{0, 0}, 1}};
  c.denominator = {{2, 0, 1}, {4, 0, 2}, {1, 0, 6}};
  return c;
}

ClosedForm load_closed_form(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot read series table " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ArgumentError("malformed series table " + path + ": " + e.what());
  }
  ClosedForm c;
  try {
    c.num_vars = static_cast<int>(j.at("variables").size());
    if (!j.at("variables").is_array() || (c.num_vars != 1 && c.num_vars != 2)) {
      throw ArgumentError("series table must list 1 or 2 variables");
    }
    const bool symmetric = j.value("symmetric", false);
    for (const auto& [key, value] : j.at("numerator").items()) {
      int a = 0;
      int b = 0;
      const auto comma = key.find(',');
      if (comma == std::string::npos) {
        a = std::stoi(key);
      } else {
        a = std::stoi(key.substr(0, comma));
        b = std::stoi(key.substr(comma + 1));
      }
      const auto v = value.get<std::int64_t>();
      c.numerator[{a, b}] = v;
      if (symmetric && a != b) c.numerator[{b, a}] = v;
    }
    for (const auto& f : j.at("denominator")) {
      ClosedForm::Factor factor;
      const auto& e = f.at("exponent");
      if (e.size() != static_cast<std::size_t>(c.num_vars)) {
        throw ArgumentError("denominator exponent must have one entry per variable");
      }
      factor.e1 = e.at(0).get<int>();
      factor.e2 = e.size() > 1 ? e.at(1).get<int>() : 0;
      factor.multiplicity = f.value("multiplicity", 1);
      c.denominator.push_back(factor);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError("malformed series table " + path + ": " + e.what());
  } catch (const std::logic_error& e) {
    throw ArgumentError("malformed series table " + path + ": " + e.what());
  }
  return c;
}

std::string data_dir() {
  if (const char* env = std::getenv("QINV_DATA_DIR"); env != nullptr && *env != '\0') return env;
  if (std::filesystem::exists(std::string(QINV_SOURCE_DATA_DIR) + "/table_lu4.json")) return QINV_SOURCE_DATA_DIR;
  return QINV_INSTALL_DATA_DIR;
}

ClosedForm lut4_closed_form(const std::string& dir) { return load_closed_form(dir + "/table_lu4.json"); }

ClosedForm lsut4_closed_form(const std::string& dir) { return load_closed_form(dir + "/table_lsu4.json"); }

}  // namespace qinv::hilbert
