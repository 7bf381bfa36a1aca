#include "qinv/random.hpp"

#include <cmath>

#include "qinv/errors.hpp"

namespace qinv {

namespace {

Complex gaussian(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

}  // namespace

State random_state(int k, Rng& rng, bool normalize) {
  if (k < 1 || k > 16) throw DimensionError("random_state: k out of range");
  std::vector<Complex> amps(std::size_t{1} << k);
  for (auto& a : amps) a = gaussian(rng);
  State s(k, std::move(amps));
  return normalize ? s.normalized() : s;
}

Mat2 random_u2(Rng& rng) {
  // Gram-Schmidt on a Ginibre matrix, QR phase convention.
  Complex a = gaussian(rng);
  Complex c = gaussian(rng);
  Complex b = gaussian(rng);
  Complex d = gaussian(rng);
  const double n1 = std::sqrt(std::norm(a) + std::norm(c));
  a /= n1;
  c /= n1;
  const Complex proj = std::conj(a) * b + std::conj(c) * d;
  b -= proj * a;
  d -= proj * c;
  const double n2 = std::sqrt(std::norm(b) + std::norm(d));
  b /= n2;
  d /= n2;
  Mat2 u;
  u.m = {a, b, c, d};
  return u;
}

Mat2 random_su2(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  double q[4];
  double norm = 0;
  for (double& x : q) {
    x = n(rng);
    norm += x * x;
  }
  norm = std::sqrt(norm);
  const Complex alpha(q[0] / norm, q[1] / norm);
  const Complex beta(q[2] / norm, q[3] / norm);
  Mat2 u;
  u.m = {alpha, -std::conj(beta), beta, std::conj(alpha)};
  return u;
}

Mat2 random_sl2(Rng& rng) {
  while (true) {
    Mat2 g;
    for (auto& x : g.m) x = gaussian(rng);
    const Complex det = g.det();
    if (std::abs(det) < 1e-3) continue;
    const Complex s = std::sqrt(det);
    for (auto& x : g.m) x /= s;
    return g;
  }
}

std::vector<Mat2> random_local(int k, LocalGroup group, Rng& rng) {
  std::vector<Mat2> g;
  for (int j = 0; j < k; ++j) {
    switch (group) {
      case LocalGroup::U2:
        g.push_back(random_u2(rng));
        break;
      case LocalGroup::SU2:
        g.push_back(random_su2(rng));
        break;
      case LocalGroup::SL2:
        g.push_back(random_sl2(rng));
        break;
    }
  }
  return g;
}

}  // namespace qinv
