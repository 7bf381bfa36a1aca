#include <algorithm>
#include <cmath>

#include "cli.hpp"
#include "qinv/errors.hpp"
#include "qinv/hilbert.hpp"
#include "qinv/measures.hpp"
#include "qinv/random.hpp"
#include "qinv/registry.hpp"
#include "qinv/series.hpp"
#include "qinv/unitary.hpp"

namespace qinv::cli {

namespace {

using nlohmann::json;

json identity_item(const IdentityResult& r) {
  json j{{"name", r.name}, {"passed", r.holds}, {"residual_terms", r.residual.size()}};
  if (r.scalar) j["scalar"] = r.scalar->to_string();
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::vector<json> identities(const SuiteOptions& o) {
  std::vector<json> items;
  items.push_back(identity_item(f_squared_relation_check(o.k)));
  if (o.k == 3) {
    for (const auto& r : grassl_identity_checks()) items.push_back(identity_item(r));
    items.push_back(identity_item(f7_check()));
    for (const auto& r : syzygy_checks()) items.push_back(identity_item(r));
  }
  return items;
}

double relative_change(Complex before, Complex after) {
  const double scale = std::max({std::abs(before), std::abs(after), 1e-300});
  return std::abs(after - before) / scale;
}

std::vector<json> invariance(const SuiteOptions& o) {
  std::vector<json> items;
  Rng rng(o.seed);
  std::vector<State> states;
  std::vector<std::array<std::vector<Mat2>, 3>> moves;
  for (int t = 0; t < o.trials; ++t) {
    states.push_back(random_state(o.k, rng));
    moves.push_back({random_local(o.k, LocalGroup::U2, rng), random_local(o.k, LocalGroup::SU2, rng),
                     random_local(o.k, LocalGroup::SL2, rng)});
  }
  for (const auto& info : registered_invariants(o.k)) {
    const auto fn = invariant_evaluator(o.k, info.name);
    const std::size_t which = info.group == InvariantGroup::LUT ? 0 : info.group == InvariantGroup::LSUT ? 1 : 2;
    const double tol = which == 2 ? 1e-8 : 1e-9;
    double worst = 0;
    for (std::size_t t = 0; t < states.size(); ++t) {
      const Complex before = fn(states[t]);
      const Complex after = fn(sl2_action(moves[t][which], states[t]));
      worst = std::max(worst, relative_change(before, after));
    }
    items.push_back({{"name", info.name},
                     {"group", group_name(info.group)},
                     {"bidegree", {info.n1, info.n2}},
                     {"max_relative_error", worst},
                     {"tolerance", tol},
                     {"passed", worst <= tol}});
  }
  return items;
}

template <class A, class B>
json compare(const std::string& name, const A& lhs, const B& rhs) {
  return {{"name", name}, {"passed", lhs == rhs}, {"lhs", lhs}, {"rhs", rhs}};
}

std::vector<json> hilbert_suite(const SuiteOptions& o) {
  using namespace hilbert;
  const int k = o.k;
  const int lut_deg = k <= 3 ? 10 : 6;
  const int slocc_deg = k <= 4 ? 8 : 4;
  const int lsut_deg = k <= 3 ? 6 : 4;
  const auto lut = hilbert_lut_coeffs(k, lut_deg);
  const auto slocc = hilbert_slocc_coeffs(k, slocc_deg);
  const auto lsut = hilbert_lsut_coeffs(k, lsut_deg, lsut_deg);
  std::vector<json> items;
  items.push_back(compare("lut character vs ct", lut, lut_coeffs_ct(k, lut_deg)));
  items.push_back(compare("slocc character vs ct", slocc, slocc_coeffs_ct(k, slocc_deg)));
  items.push_back(compare("lsut character vs ct", lsut, lsut_coeffs_ct(k, lsut_deg, lsut_deg)));
  if (k == 3) {
    items.push_back(compare("lut closed form", lut, expand_closed_form(lut3_closed_form(), lut_deg)));
    items.push_back(compare("slocc closed form", slocc, expand_closed_form(slocc3_closed_form(), slocc_deg)));
    items.push_back(compare("lsut closed form", lsut, expand_closed_form(lsut3_closed_form(), lsut_deg, lsut_deg)));
  }
  if (k == 4) {
    items.push_back(compare("lut table", lut, expand_closed_form(lut4_closed_form(), lut_deg)));
    items.push_back(compare("slocc closed form", slocc, expand_closed_form(slocc4_closed_form(), slocc_deg)));
    items.push_back(compare("lsut table", lsut, expand_closed_form(lsut4_closed_form(), lsut_deg, lsut_deg)));
  }
  return items;
}

std::vector<json> classification(const SuiteOptions& o) {
  if (o.k != 3) throw DimensionError("the classification suite is defined for k=3");
  struct Row {
    OrbitLabel label;
    std::vector<std::uint32_t> support;
  };
  const std::vector<Row> rows{{OrbitLabel::GHZ, {0b000, 0b111}}, {OrbitLabel::W, {0b001, 0b010, 0b100}},
                              {OrbitLabel::B1, {0b001, 0b010}},  {OrbitLabel::B2, {0b001, 0b100}},
                              {OrbitLabel::B3, {0b010, 0b100}},  {OrbitLabel::SEPARABLE, {0b000}}};
  Rng rng(o.seed);
  std::vector<json> items;
  for (const auto& row : rows) {
    const State s = State::from_support(3, row.support);
    const OrbitLabel got = classify3(s).label;
    int stable = 0;
    for (int t = 0; t < o.trials; ++t) {
      if (classify3(sl2_action(random_local(3, LocalGroup::SL2, rng), s)).label == row.label) ++stable;
    }
    items.push_back({{"name", label_name(row.label)},
                     {"label", label_name(got)},
                     {"stable", stable},
                     {"trials", o.trials},
                     {"passed", got == row.label && stable == o.trials}});
  }
  return items;
}

}  // namespace

nlohmann::json run_suite(const std::string& suite, const SuiteOptions& options) {
  if (options.trials < 0) throw ArgumentError("--trials must be nonnegative");
  std::vector<json> items;
  if (suite == "identities") {
    items = identities(options);
  } else if (suite == "invariance") {
    items = invariance(options);
  } else if (suite == "hilbert") {
    items = hilbert_suite(options);
  } else if (suite == "classification") {
    items = classification(options);
  } else {
    throw ArgumentError("unknown suite " + suite);
  }
  std::sort(items.begin(), items.end(),
            [](const json& a, const json& b) { return a.at("name").get<std::string>() < b.at("name").get<std::string>(); });
  const bool passed = std::all_of(items.begin(), items.end(), [](const json& j) { return j.at("passed").get<bool>(); });
  return {{"suite", suite},
          {"k", options.k},
          {"trials", options.trials},
          {"seed", options.seed},
          {"passed", passed},
          {"items", items}};
}

}  // namespace qinv::cli
