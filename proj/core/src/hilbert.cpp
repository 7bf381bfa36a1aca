#include "qinv/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "qinv/errors.hpp"

namespace qinv::hilbert {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (int x : parts) {
    if (x < 0) throw ArgumentError("partition parts must be nonnegative");
  }
}

int Partition::size() const {
  int n = 0;
  for (int x : parts) n += x;
  return n;
}

mpz_class Partition::z() const {
  mpz_class z = 1;
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const auto m = static_cast<unsigned long>(j - i);
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(parts[i]), m);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), m);
    z *= pw * fact;
    i = j;
  }
  return z;
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      Partition p;
      p.parts = cur;
      out.push_back(std::move(p));
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

namespace {

/// Characters memoized on (beta set, remaining cycle parts).
class CharacterTable {
 public:
  long long value(const Partition& lambda, const Partition& mu) {
    std::vector<int> beta(lambda.parts.size());
    const int l = lambda.length();
    for (int i = 0; i < l; ++i) beta[static_cast<std::size_t>(i)] = lambda.parts[static_cast<std::size_t>(i)] + (l - 1 - i);
    std::sort(beta.begin(), beta.end());
    std::lock_guard lock(mu_);
    return eval(beta, mu.parts, 0);
  }

 private:
  long long eval(const std::vector<int>& beta, const std::vector<int>& cycles, std::size_t pos) {
    if (pos == cycles.size()) return 1;  // only the empty shape remains
    std::vector<int> key = beta;
    key.push_back(-1);
    key.insert(key.end(), cycles.begin() + static_cast<std::ptrdiff_t>(pos), cycles.end());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int r = cycles[pos];
    long long total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      const int b = beta[i];
      const int target = b - r;
      if (target < 0 || std::binary_search(beta.begin(), beta.end(), target)) continue;
      // Beads strictly between target and b give the leg length.
      int between = 0;
      for (int other : beta) between += other > target && other < b;
      std::vector<int> next = beta;
      next[i] = target;
      std::sort(next.begin(), next.end());
      const long long sub = eval(normalize(next), cycles, pos + 1);
      total += (between % 2 == 0) ? sub : -sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

  /// Drops leading beads 0,1,2,... which correspond to zero parts.
  static std::vector<int> normalize(std::vector<int> beta) {
    std::size_t shift = 0;
    while (shift < beta.size() && beta[shift] == static_cast<int>(shift)) ++shift;
    std::vector<int> out;
    out.reserve(beta.size() - shift);
    for (std::size_t i = shift; i < beta.size(); ++i) out.push_back(beta[i] - static_cast<int>(shift));
    return out;
  }

  std::mutex mu_;
  std::map<std::vector<int>, long long> memo_;
};

CharacterTable& table() {
  static CharacterTable t;
  return t;
}

std::uint64_t to_count(const mpq_class& q, const char* what) {
  if (q.get_den() != 1 || sgn(q) < 0 || !q.get_num().fits_ulong_p()) {
    throw ConsistencyError(std::string(what) + ": character sum is not a nonnegative integer: " + q.get_str());
  }
  return q.get_num().get_ui();
}

std::int64_t checked(std::uint64_t v) {
  if (v > static_cast<std::uint64_t>(INT64_MAX)) throw ConsistencyError("series coefficient overflow");
  return static_cast<std::int64_t>(v);
}

/// chi^{((n+d)/2,(n-d)/2)}(mu) for every mu in partitions(n).
std::vector<long long> two_row_column(int n, int d, const std::vector<Partition>& classes) {
  const Partition shape({(n + d) / 2, (n - d) / 2});
  std::vector<long long> col;
  col.reserve(classes.size());
  for (const auto& mu : classes) col.push_back(table().value(shape, mu));
  return col;
}

bool admissible(int n, int d) { return d >= 0 && d <= n && (n - d) % 2 == 0; }

/// Per-degree data reused across multidegrees.
struct DegreeData {
  std::vector<Partition> classes;
  std::vector<mpz_class> z;
  std::map<int, std::vector<long long>> columns;  // d -> chi values

  explicit DegreeData(int n) : classes(partitions(n)) {
    for (const auto& mu : classes) z.push_back(mu.z());
    for (int d = n % 2; d <= n; d += 2) columns.emplace(d, two_row_column(n, d, classes));
  }

  std::uint64_t dim(std::span<const int> d) const {
    for (int v : d) {
      if (!columns.contains(v)) return 0;
    }
    mpq_class sum = 0;
    for (std::size_t m = 0; m < classes.size(); ++m) {
      mpz_class prod = 1;
      for (int v : d) prod *= static_cast<long>(columns.at(v)[m]);
      if (sgn(prod) != 0) sum += mpq_class(prod, z[m]);
    }
    sum.canonicalize();
    return to_count(sum, "dim_cov");
  }
};

/// All multidegrees of amplitude degree n, as tuples over {n%2, ..., n}.
template <typename F>
void for_each_multidegree(int n, int k, F&& f) {
  std::vector<int> d(static_cast<std::size_t>(k), n % 2);
  while (true) {
    f(std::span<const int>(d));
    int j = k - 1;
    while (j >= 0 && d[static_cast<std::size_t>(j)] + 2 > n) {
      d[static_cast<std::size_t>(j)] = n % 2;
      --j;
    }
    if (j < 0) return;
    d[static_cast<std::size_t>(j)] += 2;
  }
}

}  // namespace

long long mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw ArgumentError("mn_character: |lambda| = " + std::to_string(lambda.size()) +
                        " differs from |mu| = " + std::to_string(mu.size()));
  }
  return table().value(lambda, mu);
}

std::uint64_t dim_cov(int n, int k, std::span<const int> d) {
  if (static_cast<int>(d.size()) != k) throw DimensionError("dim_cov: multidegree length differs from k");
  if (n < 0) return 0;
  for (int v : d) {
    if (!admissible(n, v)) return 0;
  }
  return DegreeData(n).dim(d);
}

std::uint64_t dim_inv_slocc(int degree, int k) {
  if (degree < 0 || degree % 2 != 0) return 0;
  const std::vector<int> zero(static_cast<std::size_t>(k), 0);
  return dim_cov(degree, k, zero);
}

std::uint64_t dim_cov_total(int d, int k) {
  if (d < 0) return 0;
  const auto classes = partitions(d);
  std::vector<Partition> shapes;
  for (int second = 0; 2 * second <= d; ++second) shapes.emplace_back(std::vector<int>{d - second, second});
  mpq_class sum = 0;
  for (const auto& mu : classes) {
    mpz_class inner = 0;
    for (const auto& s : shapes) inner += static_cast<long>(table().value(s, mu));
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), inner.get_mpz_t(), static_cast<unsigned long>(k));
    sum += mpq_class(pw, mu.z());
  }
  sum.canonicalize();
  return to_count(sum, "dim_cov_total");
}

std::vector<std::int64_t> hilbert_slocc_coeffs(int k, int max_degree) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(std::max(max_degree, -1) + 1), 0);
  for (int n = 0; n <= max_degree; n += 2) out[static_cast<std::size_t>(n)] = checked(dim_inv_slocc(n, k));
  return out;
}

std::vector<std::int64_t> hilbert_lut_coeffs(int k, int max_degree) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(std::max(max_degree, -1) + 1), 0);
  for (int n = 0; 2 * n <= max_degree; ++n) {
    const DegreeData data(n);
    mpz_class total = 0;
    for_each_multidegree(n, k, [&](std::span<const int> d) {
      const mpz_class c = static_cast<unsigned long>(data.dim(d));
      total += c * c;
    });
    if (!total.fits_slong_p()) throw ConsistencyError("series coefficient overflow");
    out[static_cast<std::size_t>(2 * n)] = total.get_si();
  }
  return out;
}

std::vector<std::vector<std::int64_t>> hilbert_lsut_coeffs(int k, int max_n1, int max_n2) {
  const int top = std::max(max_n1, max_n2);
  std::vector<DegreeData> data;
  for (int n = 0; n <= top; ++n) data.emplace_back(n);
  std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(max_n1 + 1),
                                             std::vector<std::int64_t>(static_cast<std::size_t>(max_n2 + 1), 0));
  for (int n1 = 0; n1 <= max_n1; ++n1) {
    for (int n2 = 0; n2 <= max_n2; ++n2) {
      // Nonzero only if some multidegree is admissible for both degrees.
      if ((n1 - n2) % 2 != 0) continue;
      const int lo = std::min(n1, n2);
      mpz_class total = 0;
      for_each_multidegree(lo, k, [&](std::span<const int> d) {
        const mpz_class a = static_cast<unsigned long>(data[static_cast<std::size_t>(n1)].dim(d));
        if (sgn(a) == 0) return;
        total += a * static_cast<unsigned long>(data[static_cast<std::size_t>(n2)].dim(d));
      });
      if (!total.fits_slong_p()) throw ConsistencyError("series coefficient overflow");
      out[static_cast<std::size_t>(n1)][static_cast<std::size_t>(n2)] = total.get_si();
    }
  }
  return out;
}

}  // namespace qinv::hilbert
