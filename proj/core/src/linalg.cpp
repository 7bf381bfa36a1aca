#include "qinv/linalg.hpp"

#include <map>

#include "qinv/errors.hpp"

namespace qinv {

Polynomial PolynomialEchelon::reduce(Polynomial p) const {
  // Rows are fully reduced: a pivot occurs in no other row.
  for (const auto& row : rows_) {
    const GaussianRational c = p.coefficient(row.pivot);
    if (!c.is_zero()) p = p - row.poly.scaled(c);
  }
  return p;
}

bool PolynomialEchelon::insert(const Polynomial& p) {
  Polynomial r = reduce(p);
  if (r.is_zero()) return false;
  // Pivot on the largest monomial; normalize and clear it from older rows.
  const Monomial pivot = r.terms().back().first;
  r = r.scaled(GaussianRational(1) / r.terms().back().second);
  for (auto& row : rows_) {
    const GaussianRational c = row.poly.coefficient(pivot);
    if (!c.is_zero()) row.poly = row.poly - r.scaled(c);
  }
  rows_.push_back({pivot, std::move(r)});
  return true;
}

bool PolynomialEchelon::contains(const Polynomial& p) const { return reduce(p).is_zero(); }

std::size_t exact_rank(std::span<const Polynomial> family) {
  PolynomialEchelon e;
  for (const auto& p : family) e.insert(p);
  return e.rank();
}

GaussianRational determinant(std::vector<std::vector<GaussianRational>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw DimensionError("determinant of a non-square matrix");
  }
  GaussianRational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return GaussianRational();
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const GaussianRational inv = GaussianRational(1) / m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const GaussianRational f = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

std::optional<std::vector<GaussianRational>> solve_combination(const Polynomial& target,
                                                               std::span<const Polynomial> basis) {
  const std::size_t r = basis.size();
  std::map<Monomial, std::vector<GaussianRational>> rows;
  auto row = [&](const Monomial& m) -> std::vector<GaussianRational>& {
    auto it = rows.find(m);
    if (it == rows.end()) it = rows.emplace(m, std::vector<GaussianRational>(r + 1)).first;
    return it->second;
  };
  for (std::size_t i = 0; i < r; ++i) {
    if (basis[i].k() != target.k()) throw DimensionError("solve_combination: polynomials of different k");
    for (const auto& [m, c] : basis[i].terms()) row(m)[i] = c;
  }
  for (const auto& [m, c] : target.terms()) {
    auto it = rows.find(m);
    if (it == rows.end()) return std::nullopt;
    it->second[r] = c;
  }
  std::vector<std::vector<GaussianRational>> a;
  a.reserve(rows.size());
  for (auto& [m, v] : rows) a.push_back(std::move(v));

  std::vector<std::size_t> pivot_cols;
  std::size_t top = 0;
  for (std::size_t col = 0; col < r && top < a.size(); ++col) {
    std::size_t piv = top;
    while (piv < a.size() && a[piv][col].is_zero()) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[top]);
    const GaussianRational inv = GaussianRational(1) / a[top][col];
    for (std::size_t c = col; c <= r; ++c) a[top][c] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == top || a[i][col].is_zero()) continue;
      const GaussianRational f = a[i][col];
      for (std::size_t c = col; c <= r; ++c) a[i][c] -= f * a[top][c];
    }
    pivot_cols.push_back(col);
    ++top;
  }
  for (std::size_t i = top; i < a.size(); ++i) {
    if (!a[i][r].is_zero()) return std::nullopt;
  }
  std::vector<GaussianRational> x(r);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = a[i][r];
  return x;
}

}  // namespace qinv
