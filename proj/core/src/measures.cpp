#include "qinv/measures.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "qinv/catalog.hpp"
#include "qinv/errors.hpp"
#include "qinv/unitary.hpp"

namespace qinv {

namespace {

/// <B_d|B_d> evaluators for every d in {0,2}^k with an even number of zeros.
struct BFamilyEvaluators {
  std::vector<std::vector<int>> indices;
  std::vector<PairingEvaluator> evaluators;
};

const BFamilyEvaluators& b_evaluators(int k) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<BFamilyEvaluators>> memo;
  std::lock_guard lock(mu);
  auto& slot = memo[k];
  if (!slot) {
    auto e = std::make_unique<BFamilyEvaluators>();
    e->indices = b_family_indices(k);
    for (const auto& d : e->indices) {
      const Covariant& b = b_family(k, d);
      e->evaluators.emplace_back(b, b);
    }
    slot = std::move(e);
  }
  return *slot;
}

}  // namespace

Complex hyperdet3(const State& s) {
  if (s.k() != 3) throw DimensionError("hyperdet3 requires a three-qubit state");
  static const Polynomial det = cayley_hyperdeterminant();
  return det.evaluate(s);
}

double d1(int i, const State& s) {
  const int k = s.k();
  if (i < 1 || i > k) throw ArgumentError("d1: qubit index out of range");
  const int shift = k - i;
  const std::uint32_t contexts = 1u << (k - 1);
  auto index = [&](std::uint32_t ctx, std::uint32_t bit) {
    const std::uint32_t low = ctx & ((1u << shift) - 1);
    const std::uint32_t high = ctx >> shift;
    return (high << (shift + 1)) | (bit << shift) | low;
  };
  double sum = 0;
  for (std::uint32_t e = 0; e < contexts; ++e) {
    for (std::uint32_t f = e + 1; f < contexts; ++f) {
      const Complex det = s[index(e, 0)] * s[index(f, 1)] - s[index(e, 1)] * s[index(f, 0)];
      sum += std::norm(det);
    }
  }
  // Ordered pairs count each unordered pair twice.
  return 4 * sum;
}

MeasureReport meyer_wallach(const State& s, MeasureRoute route) {
  const int k = s.k();
  MeasureReport r;
  r.d1.assign(static_cast<std::size_t>(k), 0.0);
  if (route == MeasureRoute::Direct) {
    for (int i = 1; i <= k; ++i) r.d1[static_cast<std::size_t>(i - 1)] = d1(i, s);
  } else {
    if (k < 2) throw DimensionError("covariant route needs k >= 2");
    const auto& ev = b_evaluators(k);
    const double scale = std::ldexp(1.0, 2 - k);
    for (std::size_t n = 0; n < ev.indices.size(); ++n) {
      const double b = ev.evaluators[n](s).real();
      for (int i = 0; i < k; ++i) {
        if (ev.indices[n][static_cast<std::size_t>(i)] == 0) r.d1[static_cast<std::size_t>(i)] += scale * b;
      }
    }
  }
  for (double v : r.d1) r.q += v;
  r.q /= k;
  return r;
}

std::string label_name(OrbitLabel l) {
  switch (l) {
    case OrbitLabel::SEPARABLE:
      return "SEPARABLE";
    case OrbitLabel::B1:
      return "B1";
    case OrbitLabel::B2:
      return "B2";
    case OrbitLabel::B3:
      return "B3";
    case OrbitLabel::W:
      return "W";
    case OrbitLabel::GHZ:
      return "GHZ";
    case OrbitLabel::UNCLASSIFIED:
      return "UNCLASSIFIED";
  }
  return "UNCLASSIFIED";
}

OrbitLabel parse_label(const std::string& name) {
  for (auto l : {OrbitLabel::SEPARABLE, OrbitLabel::B1, OrbitLabel::B2, OrbitLabel::B3, OrbitLabel::W,
                 OrbitLabel::GHZ, OrbitLabel::UNCLASSIFIED}) {
    if (label_name(l) == name) return l;
  }
  throw ArgumentError("unknown orbit label " + name);
}

namespace {

Covariant absolute(const Covariant& c) {
  std::vector<Polynomial::Term> terms;
  for (const auto& [m, z] : c.poly.terms()) terms.emplace_back(m, GaussianRational(abs(z.re()) + abs(z.im())));
  Covariant out = c;
  out.poly = Polynomial::from_terms(c.k(), std::move(terms));
  return out;
}

}  // namespace

Classification classify3(const State& s, double tol) {
  if (s.k() != 3) throw DimensionError("classify3 requires a three-qubit state");
  if (s.norm() == 0) throw ArgumentError("classify3: zero state");
  static const std::array<const char*, 4> names{"Hx", "Hy", "Hz", "Delta"};
  static const auto ev = [] {
    std::vector<std::pair<PairingEvaluator, PairingEvaluator>> out;
    for (const char* n : names) {
      const Covariant& c = catalog_3(n);
      const Covariant a = absolute(c);
      out.emplace_back(PairingEvaluator(c, c), PairingEvaluator(a, a));
    }
    return out;
  }();
  const State n = s.normalized();
  std::vector<Complex> mags;
  for (Complex z : n.amplitudes()) mags.emplace_back(std::abs(z));
  const State m(3, std::move(mags));
  Classification c;
  for (std::size_t i = 0; i < 4; ++i) {
    c.values[i] = ev[i].first(n).real();
    const double scale = ev[i].second(m).real();
    c.relative[i] = scale > 0 ? std::sqrt(std::max(c.values[i], 0.0) / scale) : 0.0;
    c.nonzero[i] = c.relative[i] > tol;
  }
  const auto [bx, by, bz, d] = c.nonzero;
  if (bx && by && bz) {
    c.label = d ? OrbitLabel::GHZ : OrbitLabel::W;
  } else if (d) {
    c.label = OrbitLabel::UNCLASSIFIED;
  } else if (bx && !by && !bz) {
    c.label = OrbitLabel::B1;
  } else if (!bx && by && !bz) {
    c.label = OrbitLabel::B2;
  } else if (!bx && !by && bz) {
    c.label = OrbitLabel::B3;
  } else if (!bx && !by && !bz) {
    c.label = OrbitLabel::SEPARABLE;
  } else {
    c.label = OrbitLabel::UNCLASSIFIED;
  }
  return c;
}

namespace {

int onion_level(OrbitLabel l) {
  switch (l) {
    case OrbitLabel::SEPARABLE:
      return 0;
    case OrbitLabel::B1:
    case OrbitLabel::B2:
    case OrbitLabel::B3:
      return 1;
    case OrbitLabel::W:
      return 2;
    case OrbitLabel::GHZ:
      return 3;
    case OrbitLabel::UNCLASSIFIED:
      return -1;
  }
  return -1;
}

}  // namespace

bool onion_leq(OrbitLabel a, OrbitLabel b) {
  if (a == b) return true;
  const int la = onion_level(a);
  const int lb = onion_level(b);
  if (la < 0 || lb < 0) return false;
  if (la == 1 && lb == 1) return false;
  return la < lb;
}

}  // namespace qinv
