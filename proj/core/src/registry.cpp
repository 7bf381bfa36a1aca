#include "qinv/registry.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "qinv/catalog.hpp"
#include "qinv/errors.hpp"
#include "qinv/unitary.hpp"

namespace qinv {

namespace {

struct Entry {
  InvariantInfo info;
  std::function<InvariantFunction()> build;
};

InvariantFunction from_poly(Polynomial p) {
  auto shared = std::make_shared<const Polynomial>(std::move(p));
  return [shared](const State& s) { return shared->evaluate(s); };
}

InvariantFunction from_pairing(const Covariant& phi, const Covariant& psi) {
  auto ev = std::make_shared<const PairingEvaluator>(phi, psi);
  return [ev](const State& s) { return (*ev)(s); };
}

InvariantFunction product(std::vector<InvariantFunction> fs) {
  return [fs = std::move(fs)](const State& s) {
    Complex v = 1;
    for (const auto& f : fs) v *= f(s);
    return v;
  };
}

const std::vector<Covariant>& multilinear_basis(int k) {
  static std::mutex mu;
  static std::map<int, std::vector<Covariant>> memo;
  {
    std::lock_guard lock(mu);
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
  }
  auto basis = degree3_multilinear_basis(k);
  std::lock_guard lock(mu);
  return memo.try_emplace(k, std::move(basis)).first->second;
}

void add(std::vector<Entry>& out, std::string name, InvariantGroup g, int n1, int n2,
         std::function<InvariantFunction()> build) {
  out.push_back({{std::move(name), g, n1, n2}, std::move(build)});
}

std::vector<Entry> build_entries(int k) {
  if (k < 2 || k > 6) throw DimensionError("the invariant registry covers 2 <= k <= 6");
  std::vector<Entry> out;
  const std::string ones(static_cast<std::size_t>(k), '1');
  auto f = [k]() -> const Covariant& { return catalog(k, "f"); };
  auto a = [f] { return from_pairing(f(), f()); };
  add(out, "A", InvariantGroup::LUT, 1, 1, a);
  add(out, "A_" + ones, InvariantGroup::LUT, 1, 1, a);
  add(out, "A^2", InvariantGroup::LUT, 2, 2, [a] { return product({a(), a()}); });

  const auto indices = b_family_indices(k);
  if (k != 3) {
    for (std::size_t i = 1; i < indices.size(); ++i) {
      const auto d = indices[i];
      const bool all_zero = i + 1 == indices.size() && k % 2 == 0;
      add(out, all_zero ? "B" : b_name(d), InvariantGroup::LUT, 2, 2, [k, d] {
        const Covariant& b = b_family(k, d);
        return from_pairing(b, b);
      });
    }
  }
  if (k % 2 == 0) {
    const std::vector<int> zeros(static_cast<std::size_t>(k), 0);
    add(out, b_name(zeros), InvariantGroup::SLOCC, 2, 0, [k, zeros] { return from_poly(b_family(k, zeros).poly); });
  }

  const int count = static_cast<int>((std::int64_t{1} << (k - 1)) + (k % 2 == 0 ? 1 : -1)) / 3;
  for (int i = 0; i < count; ++i) {
    add(out, "D" + std::to_string(i + 1), InvariantGroup::SLOCC, 4, 0, [k, i] {
      const std::vector<int> e(static_cast<std::size_t>(k), 1);
      return from_poly(transvect(catalog(k, "f"), multilinear_basis(k)[static_cast<std::size_t>(i)], e).poly);
    });
    add(out, "C" + std::to_string(i + 1), InvariantGroup::LSUT, 3, 1,
        [k, i] { return from_pairing(multilinear_basis(k)[static_cast<std::size_t>(i)], catalog(k, "f")); });
  }

  if (k == 3) {
    auto inv = [](const char* name) { return [name] { return from_poly(three_qubit_invariant(name).poly); }; };
    add(out, "B_200", InvariantGroup::LUT, 2, 2, inv("B_200"));
    add(out, "B_020", InvariantGroup::LUT, 2, 2, inv("B_020"));
    add(out, "B_002", InvariantGroup::LUT, 2, 2, inv("B_002"));
    add(out, "C_111", InvariantGroup::LUT, 3, 3, inv("C_111"));
    add(out, "D_000", InvariantGroup::LUT, 4, 4, inv("D_000"));
    add(out, "F_222", InvariantGroup::LUT, 6, 6, inv("F_222"));
    const std::array<int, 7> deg{1, 2, 2, 2, 3, 4, 6};
    for (int i = 1; i <= 7; ++i) {
      add(out, "f" + std::to_string(i), InvariantGroup::LUT, deg[static_cast<std::size_t>(i - 1)],
          deg[static_cast<std::size_t>(i - 1)], [i] { return from_poly(grassl_f(i).poly); });
    }
    add(out, "Delta", InvariantGroup::SLOCC, 4, 0, inv("Delta"));
    add(out, "Det", InvariantGroup::SLOCC, 4, 0, [] { return from_poly(cayley_hyperdeterminant()); });
    add(out, "s2", InvariantGroup::LSUT, 3, 1, inv("s2"));
  }

  if (k == 4) {
    auto c4 = [](const char* n) -> const Covariant& { return catalog_4(n); };
    auto pair = [c4](const char* p, const char* q) { return [c4, p, q] { return from_pairing(c4(p), c4(q)); }; };
    auto big_b = pair("B_0000", "B_0000");
    add(out, "A^3", InvariantGroup::LUT, 3, 3, [a] { return product({a(), a(), a()}); });
    add(out, "AB", InvariantGroup::LUT, 3, 3, [a, big_b] { return product({a(), big_b()}); });
    for (const char* d : {"2200", "2020", "2002", "0220", "0202", "0022"}) {
      const std::string bn = std::string("B_") + d;
      add(out, "AB_" + std::string(d), InvariantGroup::LUT, 3, 3, [a, bn] {
        const Covariant& b = catalog_4(bn);
        return product({a(), from_pairing(b, b)});
      });
    }
    auto fb = [] {
      Covariant c = catalog_4("f") * catalog_4("B_0000");
      c.name = "fB";
      return c;
    };
    struct Named {
      const char* label;
      std::function<Covariant()> cov;
    };
    const std::vector<Named> cs{{"C1", [] { return catalog_4("C1_1111"); }},
                                {"C2", [] { return catalog_4("C2_1111"); }},
                                {"fB", fb}};
    const std::vector<std::pair<int, int>> mixed{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}};
    for (auto [p, q] : mixed) {
      const Named& x = cs[static_cast<std::size_t>(p)];
      const Named& y = cs[static_cast<std::size_t>(q)];
      add(out, std::string("<") + x.label + "|" + y.label + ">", InvariantGroup::LUT, 3, 3,
          [x, y] { return from_pairing(x.cov(), y.cov()); });
    }
    for (const char* n : {"C_3111", "C_1311", "C_1131", "C_1113"}) {
      const std::string s = std::string(n).erase(1, 1);
      add(out, "<" + s + "|" + s + ">", InvariantGroup::LUT, 3, 3, pair(n, n));
    }
    for (const char* n : {"D_4000", "D_0400", "D_0040", "D_0004"}) {
      const std::string s = std::string(n).erase(1, 1);
      add(out, "<" + s + "|" + s + ">", InvariantGroup::LUT, 4, 4, pair(n, n));
    }
    add(out, "<E3111|E3111>", InvariantGroup::LUT, 5, 5, pair("E_3111", "E_3111"));
  }
  return out;
}

const std::vector<Entry>& entries(int k) {
  static std::mutex mu;
  static std::map<int, std::vector<Entry>> memo;
  std::lock_guard lock(mu);
  auto it = memo.find(k);
  if (it == memo.end()) it = memo.emplace(k, build_entries(k)).first;
  return it->second;
}

const Entry& find(int k, std::string_view name) {
  for (const auto& e : entries(k)) {
    if (e.info.name == name) return e;
  }
  throw ArgumentError("unknown invariant " + std::string(name) + " for k=" + std::to_string(k));
}

}  // namespace

std::string group_name(InvariantGroup g) {
  switch (g) {
    case InvariantGroup::LUT:
      return "LUT";
    case InvariantGroup::LSUT:
      return "LSUT";
    case InvariantGroup::SLOCC:
      return "SLOCC";
  }
  return "LUT";
}

std::vector<InvariantInfo> registered_invariants(int k) {
  std::vector<InvariantInfo> out;
  for (const auto& e : entries(k)) out.push_back(e.info);
  return out;
}

InvariantInfo invariant_info(int k, std::string_view name) { return find(k, name).info; }

InvariantFunction invariant_evaluator(int k, std::string_view name) {
  static std::mutex mu;
  static std::map<std::pair<int, std::string>, InvariantFunction> memo;
  const std::pair<int, std::string> key{k, std::string(name)};
  {
    std::lock_guard lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  InvariantFunction fn = find(k, name).build();
  std::lock_guard lock(mu);
  return memo.try_emplace(key, std::move(fn)).first->second;
}

}  // namespace qinv
