#include "qinv/catalog.hpp"

#include <array>
#include <map>
#include <mutex>

#include "qinv/errors.hpp"
#include "qinv/hilbert.hpp"
#include "qinv/linalg.hpp"

namespace qinv {

namespace {

/// Process-wide memo of named covariants. Entries are never erased, so
/// returned references stay valid.
class CovariantCache {
 public:
  template <typename Build>
  const Covariant& get(const std::string& key, Build&& build) {
    {
      std::lock_guard lock(mu_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    Covariant c = build();
    std::lock_guard lock(mu_);
    return cache_.try_emplace(key, std::move(c)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<std::string, Covariant> cache_;
};

CovariantCache& cache() {
  static CovariantCache c;
  return c;
}

VariableId x(int slot, int b) { return VariableId::aux(slot, b); }

/// det [[d2f/dp0 dq0, d2f/dp1 dq0], [d2f/dp0 dq1, d2f/dp1 dq1]].
Polynomial second_partial_det(const Polynomial& f, int p, int q) {
  auto d2 = [&](int bp, int bq) { return f.partial(x(p, bp)).partial(x(q, bq)); };
  return d2(0, 0) * d2(1, 1) - d2(1, 0) * d2(0, 1);
}

std::vector<int> digits(std::string_view s) {
  std::vector<int> d;
  for (char c : s) {
    if (c < '0' || c > '9') throw ArgumentError("bad multidegree digits in name");
    d.push_back(c - '0');
  }
  return d;
}

Covariant named(Covariant c, std::string name) {
  c.name = std::move(name);
  return c;
}

}  // namespace

Covariant ground_form(int k) {
  if (k < 1 || k > VariableId::kMaxQubits) throw DimensionError("ground_form: k out of range");
  std::vector<Polynomial::Term> terms;
  const std::uint32_t n = 1u << k;
  for (std::uint32_t idx = 0; idx < n; ++idx) {
    Monomial m = Monomial::of(VariableId::amp(idx));
    for (int j = 0; j < k; ++j) m.multiply_var(x(j, static_cast<int>((idx >> (k - 1 - j)) & 1u)), 1);
    terms.emplace_back(std::move(m), GaussianRational(1));
  }
  Covariant f;
  f.poly = Polynomial::from_terms(k, std::move(terms));
  f.amp_degree = 1;
  f.multidegree.assign(static_cast<std::size_t>(k), 1);
  f.name = "f";
  return f;
}

std::vector<std::vector<int>> b_family_indices(int k) {
  std::vector<std::vector<int>> out;
  for (int zeros = 0; zeros <= k; zeros += 2) {
    // Zero positions as a combination, lexicographic.
    std::vector<int> pos(static_cast<std::size_t>(zeros));
    for (int i = 0; i < zeros; ++i) pos[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::vector<int> d(static_cast<std::size_t>(k), 2);
      for (int p : pos) d[static_cast<std::size_t>(p)] = 0;
      out.push_back(std::move(d));
      int i = zeros - 1;
      while (i >= 0 && pos[static_cast<std::size_t>(i)] == k - zeros + i) --i;
      if (i < 0) break;
      ++pos[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < zeros; ++j) pos[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

std::string b_name(std::span<const int> d) {
  std::string s = "B_";
  for (int v : d) s += std::to_string(v);
  return s;
}

const Covariant& b_family(int k, std::span<const int> d) {
  if (static_cast<int>(d.size()) != k) throw DimensionError("b_family: multidegree length differs from k");
  int zeros = 0;
  std::vector<int> eps;
  for (int v : d) {
    if (v != 0 && v != 2) throw ArgumentError("b_family: multidegree entries must be 0 or 2");
    if (v == 0) ++zeros;
    eps.push_back((2 - v) / 2);
  }
  if (zeros % 2 != 0) {
    throw ArgumentError(
        "b_family: degree-2 covariants exist only when the number of zeros in d is even");
  }
  const std::string name = b_name(d);
  return cache().get(std::to_string(k) + ":" + name, [&] {
    const Covariant f = ground_form(k);
    return named(transvect(f, f, eps), name);
  });
}

const Covariant& catalog_3(std::string_view name) {
  const std::string key = "3:" + std::string(name);
  if (name == "f") return cache().get(key, [] { return ground_form(3); });
  if (name == "Hx" || name == "Hy" || name == "Hz") {
    return cache().get(key, [&] {
      const Polynomial f = ground_form(3).poly;
      Polynomial h;
      if (name == "Hx") h = second_partial_det(f, 1, 2);
      if (name == "Hy") h = second_partial_det(f, 0, 2);
      if (name == "Hz") h = second_partial_det(f, 0, 1);
      return make_covariant(std::move(h), std::string(name));
    });
  }
  if (name == "T") {
    return cache().get(key, [] {
      const Polynomial f = ground_form(3).poly;
      const Polynomial& hx = catalog_3("Hx").poly;
      Polynomial t = f.partial(x(0, 0)) * hx.partial(x(0, 1)) - f.partial(x(0, 1)) * hx.partial(x(0, 0));
      return make_covariant(std::move(t), "T");
    });
  }
  if (name == "Delta") {
    return cache().get(key, [] {
      const std::array<int, 3> e{1, 1, 1};
      return named(transvect(catalog_3("T"), catalog_3("f"), e), "Delta");
    });
  }
  throw ArgumentError("unknown 3-qubit covariant: " + std::string(name));
}

const Covariant& catalog_4(std::string_view name) {
  const std::string key = "4:" + std::string(name);
  auto chain = [&](std::string_view left, std::string_view right, std::array<int, 4> e) -> const Covariant& {
    return cache().get(key, [&] {
      return named(transvect(catalog_4(left), catalog_4(right), e), std::string(name));
    });
  };
  if (name == "f") return cache().get(key, [] { return ground_form(4); });
  if (name.size() == 6 && name.substr(0, 2) == "B_") {
    const std::vector<int> d = digits(name.substr(2));
    int zeros = 0;
    for (int v : d) zeros += v == 0;
    if (zeros == 2 || zeros == 4) return b_family(4, d);
  }
  if (name == "C1_1111") return chain("f", "B_2200", {1, 1, 0, 0});
  if (name == "C2_1111") return chain("f", "B_2020", {1, 0, 1, 0});
  if (name == "C_3111") return chain("f", "B_2200", {0, 1, 0, 0});
  if (name == "C_1311") return chain("f", "B_2200", {1, 0, 0, 0});
  if (name == "C_1131") return chain("f", "B_2020", {1, 0, 0, 0});
  if (name == "C_1113") return chain("f", "B_2002", {1, 0, 0, 0});
  if (name == "D_4000") return chain("f", "C_3111", {0, 1, 1, 1});
  if (name == "D_0400") return chain("f", "C_1311", {1, 0, 1, 1});
  if (name == "D_0040") return chain("f", "C_1131", {1, 1, 0, 1});
  if (name == "D_0004") return chain("f", "C_1113", {1, 1, 1, 0});
  if (name == "D_2200") return chain("f", "C_3111", {1, 0, 1, 1});
  if (name == "E_3111") return chain("f", "D_2200", {1, 1, 0, 0});
  throw ArgumentError("unknown 4-qubit covariant: " + std::string(name));
}

std::vector<std::string> catalog_names(int k) {
  if (k == 3) return {"Delta", "Hx", "Hy", "Hz", "T", "f"};
  if (k == 4) {
    return {"B_0000", "B_0022", "B_0202", "B_0220", "B_2002", "B_2020", "B_2200",
            "C1_1111", "C2_1111", "C_1113", "C_1131", "C_1311", "C_3111", "D_0004",
            "D_0040", "D_0400", "D_2200", "D_4000", "E_3111", "f"};
  }
  std::vector<std::string> names{"f"};
  for (const auto& d : b_family_indices(k)) names.push_back(b_name(d));
  return names;
}

const Covariant& catalog(int k, std::string_view name) {
  if (k == 3) {
    if (name.substr(0, 2) != "B_") return catalog_3(name);
  } else if (k == 4) {
    return catalog_4(name);
  }
  if (name == "f") return cache().get(std::to_string(k) + ":f", [k] { return ground_form(k); });
  if (name.size() == static_cast<std::size_t>(k) + 2 && name.substr(0, 2) == "B_") {
    return b_family(k, digits(name.substr(2)));
  }
  throw ArgumentError("unknown covariant " + std::string(name) + " for k=" + std::to_string(k));
}

std::vector<Covariant> degree3_multilinear_basis(int k) {
  if (k < 2) throw ArgumentError("degree3_multilinear_basis: k must be at least 2");
  const Covariant f = ground_form(k);
  PolynomialEchelon echelon;
  std::vector<Covariant> basis;
  for (const auto& d : b_family_indices(k)) {
    std::vector<int> e(d.size());
    for (std::size_t j = 0; j < d.size(); ++j) e[j] = d[j] / 2;
    Covariant c = named(transvect(f, b_family(k, d), e), "(f," + b_name(d) + ")");
    if (echelon.insert(c.poly)) basis.push_back(std::move(c));
  }
  const std::vector<int> ones(static_cast<std::size_t>(k), 1);
  const auto expected = hilbert::dim_cov(3, k, ones);
  if (basis.size() != expected) {
    throw ConsistencyError("degree-3 multilinear covariants: constructed rank " +
                           std::to_string(basis.size()) + " but the character formula gives " +
                           std::to_string(expected));
  }
  return basis;
}

Polynomial cayley_hyperdeterminant() {
  auto a = [](const char* bits) {
    std::uint32_t idx = 0;
    for (int i = 0; i < 3; ++i) idx = (idx << 1) | static_cast<std::uint32_t>(bits[i] - '0');
    return VariableId::amp(idx);
  };
  auto term = [&](long c, std::initializer_list<const char*> vars) {
    Monomial m;
    for (const char* v : vars) m.multiply_var(a(v), 1);
    return Polynomial::monomial(3, std::move(m), GaussianRational(c));
  };
  Polynomial det(3);
  det += term(1, {"000", "000", "111", "111"});
  det += term(1, {"001", "001", "110", "110"});
  det += term(1, {"010", "010", "101", "101"});
  det += term(1, {"100", "100", "011", "011"});
  det += term(-2, {"000", "111", "001", "110"});
  det += term(-2, {"000", "111", "010", "101"});
  det += term(-2, {"000", "111", "011", "100"});
  det += term(-2, {"001", "110", "010", "101"});
  det += term(-2, {"001", "110", "011", "100"});
  det += term(-2, {"010", "101", "011", "100"});
  det += term(4, {"000", "011", "101", "110"});
  det += term(4, {"001", "010", "100", "111"});
  return det;
}

}  // namespace qinv
