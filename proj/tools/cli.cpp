#include "cli.hpp"

#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qinv/catalog.hpp"
#include "qinv/errors.hpp"
#include "qinv/hilbert.hpp"
#include "qinv/measures.hpp"
#include "qinv/random.hpp"
#include "qinv/registry.hpp"
#include "qinv/series.hpp"

namespace qinv::cli {

namespace {

using nlohmann::json;

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json error_json(const std::string& type, const std::string& message) {
  return {{"error", {{"type", type}, {"message", message}}}};
}

State load_state(const std::string& path, std::optional<int> k) {
  State s = State::load(path);
  if (k && *k != s.k()) {
    throw DimensionError("k mismatch: --k " + std::to_string(*k) + " but the state file has k=" +
                         std::to_string(s.k()));
  }
  return s;
}

json eval_command(const std::string& path, std::optional<int> k, const std::string& name) {
  const State s = load_state(path, k);
  const InvariantInfo info = invariant_info(s.k(), name);
  const Complex v = invariant_evaluator(s.k(), name)(s);
  return {{"name", info.name},
          {"k", s.k()},
          {"group", group_name(info.group)},
          {"bidegree", {info.n1, info.n2}},
          {"value", complex_json(v)}};
}

json classify_command(const std::string& path, std::optional<int> k, double tol) {
  const State s = load_state(path, k);
  const Classification c = classify3(s, tol);
  const std::array<const char*, 4> names{"B_200", "B_020", "B_002", "D_000"};
  json inv = json::object();
  json rel = json::object();
  json nz = json::object();
  for (std::size_t i = 0; i < 4; ++i) {
    inv[names[i]] = c.values[i];
    rel[names[i]] = c.relative[i];
    nz[names[i]] = c.nonzero[i];
  }
  json below = json::array();
  for (auto l : {OrbitLabel::SEPARABLE, OrbitLabel::B1, OrbitLabel::B2, OrbitLabel::B3, OrbitLabel::W,
                 OrbitLabel::GHZ}) {
    if (l != c.label && onion_leq(l, c.label)) below.push_back(label_name(l));
  }
  return {{"label", label_name(c.label)}, {"invariants", inv}, {"relative", rel}, {"nonzero", nz}, {"tol", tol}, {"onion_below", below}};
}

json measure_command(const std::string& path, std::optional<int> k, const std::string& route) {
  const State s = load_state(path, k);
  MeasureRoute r = MeasureRoute::Direct;
  if (route == "covariant") {
    r = MeasureRoute::Covariant;
  } else if (route != "direct") {
    throw ArgumentError("unknown route " + route);
  }
  const MeasureReport m = meyer_wallach(s, r);
  return {{"Q", m.q}, {"d1", m.d1}, {"route", route}};
}

json hilbert_command(const std::string& group, int k, int max_degree, std::optional<int> max_conj,
                     const std::string& method) {
  if (max_degree < 0) throw ArgumentError("--max-degree must be nonnegative");
  if (group == "lsut") {
    const int m2 = max_conj.value_or(max_degree);
    if (m2 < 0) throw ArgumentError("--max-conj-degree must be nonnegative");
    std::vector<std::vector<std::int64_t>> t;
    if (method == "character") {
      t = hilbert::hilbert_lsut_coeffs(k, max_degree, m2);
    } else if (method == "ct") {
      t = hilbert::lsut_coeffs_ct(k, max_degree, m2);
    } else if (method == "closed-form") {
      if (k == 3) {
        t = hilbert::expand_closed_form(hilbert::lsut3_closed_form(), max_degree, m2);
      } else if (k == 4) {
        t = hilbert::expand_closed_form(hilbert::lsut4_closed_form(), max_degree, m2);
      } else {
        throw ArgumentError("no closed form for LSUT invariants with k=" + std::to_string(k));
      }
    } else {
      throw ArgumentError("unknown method " + method);
    }
    return t;
  }
  if (max_conj) throw ArgumentError("--max-conj-degree applies to --group lsut only");
  std::vector<std::int64_t> v;
  if (group == "slocc") {
    if (method == "character") {
      v = hilbert::hilbert_slocc_coeffs(k, max_degree);
    } else if (method == "ct") {
      v = hilbert::slocc_coeffs_ct(k, max_degree);
    } else if (method == "closed-form") {
      if (k == 3) {
        v = hilbert::expand_closed_form(hilbert::slocc3_closed_form(), max_degree);
      } else if (k == 4) {
        v = hilbert::expand_closed_form(hilbert::slocc4_closed_form(), max_degree);
      } else {
        throw ArgumentError("no closed form for SLOCC invariants with k=" + std::to_string(k));
      }
    } else {
      throw ArgumentError("unknown method " + method);
    }
  } else if (group == "lut") {
    if (method == "character") {
      v = hilbert::hilbert_lut_coeffs(k, max_degree);
    } else if (method == "ct") {
      v = hilbert::lut_coeffs_ct(k, max_degree);
    } else if (method == "closed-form") {
      if (k == 3) {
        v = hilbert::expand_closed_form(hilbert::lut3_closed_form(), max_degree);
      } else if (k == 4) {
        v = hilbert::expand_closed_form(hilbert::lut4_closed_form(), max_degree);
      } else {
        throw ArgumentError("no closed form for LUT invariants with k=" + std::to_string(k));
      }
    } else {
      throw ArgumentError("unknown method " + method);
    }
  } else {
    throw ArgumentError("unknown group " + group);
  }
  return v;
}

json covariant_command(int k, const std::string& name, bool print) {
  const Covariant& c = catalog(k, name);
  json j{{"name", c.name.empty() ? name : c.name},
         {"k", k},
         {"degree", c.amp_degree},
         {"multidegree", c.multidegree},
         {"terms", c.poly.size()}};
  if (print) j["polynomial"] = c.poly.to_string();
  return j;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Invariants and covariants of qubit systems"};
  app.require_subcommand(1);

  std::string state_path;
  std::optional<int> k_opt;
  std::string invariant;
  double tol = 1e-9;
  std::string route = "direct";
  std::string group;
  int k = 3;
  int max_degree = 0;
  std::optional<int> max_conj;
  std::string method = "character";
  std::string name;
  bool print = false;
  std::string suite;
  int trials = 20;
  std::uint64_t seed = kDefaultSeed;

  auto* eval = app.add_subcommand("eval", "Evaluate a named invariant on a state");
  eval->add_option("--state", state_path, "State JSON file")->required();
  eval->add_option("--invariant", invariant, "Invariant name")->required();
  eval->add_option("--k", k_opt, "Expected number of qubits");

  auto* classify = app.add_subcommand("classify", "Three-qubit SLOCC orbit");
  classify->add_option("--state", state_path, "State JSON file")->required();
  classify->add_option("--tol", tol, "Vanishing threshold");
  classify->add_option("--k", k_opt, "Expected number of qubits");

  auto* measure = app.add_subcommand("measure", "Meyer-Wallach measure");
  measure->add_option("--state", state_path, "State JSON file")->required();
  measure->add_option("--route", route, "direct or covariant");
  measure->add_option("--k", k_opt, "Expected number of qubits");

  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert series coefficients");
  hilbert_cmd->add_option("--group", group, "slocc, lut or lsut")->required();
  hilbert_cmd->add_option("--k", k, "Number of qubits")->required();
  hilbert_cmd->add_option("--max-degree", max_degree, "Highest degree (in z for lsut)")->required();
  hilbert_cmd->add_option("--max-conj-degree", max_conj, "Highest degree in zbar (lsut)");
  hilbert_cmd->add_option("--method", method, "character, ct or closed-form");

  auto* covariant = app.add_subcommand("covariant", "Show a catalogued covariant");
  covariant->add_option("--k", k, "Number of qubits")->required();
  covariant->add_option("--name", name, "Covariant name")->required();
  covariant->add_flag("--print", print, "Include the polynomial");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "identities, invariance, hilbert or classification")->required();
  verify->add_option("--k", k, "Number of qubits");
  verify->add_option("--trials", trials, "Random trials");
  verify->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << json{{"help", app.help()}}.dump(2) << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    out << error_json("UsageError", e.what()).dump(2) << "\n";
    return 1;
  }

  json result;
  int code = 0;
  try {
    if (*eval) {
      result = eval_command(state_path, k_opt, invariant);
    } else if (*classify) {
      result = classify_command(state_path, k_opt, tol);
    } else if (*measure) {
      result = measure_command(state_path, k_opt, route);
    } else if (*hilbert_cmd) {
      result = hilbert_command(group, k, max_degree, max_conj, method);
    } else if (*covariant) {
      result = covariant_command(k, name, print);
    } else if (*verify) {
      result = run_suite(suite, {k, trials, seed});
      code = result.at("passed").get<bool>() ? 0 : 2;
    }
  } catch (const DimensionError& e) {
    result = error_json("DimensionError", e.what());
    code = 1;
  } catch (const DegreeError& e) {
    result = error_json("DegreeError", e.what());
    code = 1;
  } catch (const ArgumentError& e) {
    result = error_json("ArgumentError", e.what());
    code = 1;
  } catch (const SpecificationError& e) {
    result = error_json("SpecificationError", e.what());
    code = 1;
  } catch (const Error& e) {
    result = error_json("Error", e.what());
    code = 1;
  } catch (const std::exception& e) {
    result = error_json("InternalError", e.what());
    code = 1;
  }
  out << result.dump(2) << "\n";
  return code;
}

}  // namespace qinv::cli
