#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "qinv/polynomial.hpp"
#include "qinv/random.hpp"

namespace qinv::testing {

inline GaussianRational small_gaussian(Rng& rng) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  return {mpq_class(num(rng), static_cast<unsigned long>(den(rng))), mpq_class(num(rng), 1)};
}

// Random polynomial in amplitudes, conjugates and plain auxiliaries of slot 0.
inline Polynomial random_poly(int k, Rng& rng, int terms = 4, unsigned max_exp = 2) {
  const std::uint32_t n = 1u << k;
  std::uniform_int_distribution<std::uint32_t> idx(0, n - 1);
  std::uniform_int_distribution<unsigned> e(0, max_exp);
  std::vector<Polynomial::Term> out;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    if (unsigned p = e(rng)) m.multiply_var(VariableId::amp(idx(rng)), p);
    if (unsigned p = e(rng)) m.multiply_var(VariableId::amp_conj(idx(rng)), p);
    if (unsigned p = e(rng)) m.multiply_var(VariableId::aux(0, 1), p);
    out.emplace_back(m, small_gaussian(rng));
  }
  return Polynomial::from_terms(k, std::move(out));
}

inline double rel_diff(Complex a, Complex b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

inline AuxPoint random_aux(int k, Rng& rng) {
  std::normal_distribution<double> g;
  AuxPoint x(static_cast<std::size_t>(k));
  for (auto& p : x) p = {Complex(g(rng), g(rng)), Complex(g(rng), g(rng))};
  return x;
}

}  // namespace qinv::testing
