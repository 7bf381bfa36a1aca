#pragma once

#include <array>
#include <string>
#include <vector>

#include "qinv/state.hpp"

namespace qinv {

/// Cayley hyperdeterminant of a three-qubit state.
Complex hyperdet3(const State& s);

/// D_1^{(i)}: twice the sum over ordered pairs of distinct (k-1)-bit
/// contexts of |det|^2 of the 2x2 amplitude blocks along qubit i (1-based).
/// Equals 4 det rho_i for a normalized state.
double d1(int i, const State& s);

enum class MeasureRoute { Direct, Covariant };

struct MeasureReport {
  double q = 0;
  std::vector<double> d1;
};

/// Meyer-Wallach Q and its per-qubit terms. The covariant route combines
/// <B_d|B_d> over d in {0,2}^k: D_1^{(i)} = 2^{2-k} sum_{d_i = 0} B_d.
MeasureReport meyer_wallach(const State& s, MeasureRoute route = MeasureRoute::Direct);

enum class OrbitLabel { SEPARABLE, B1, B2, B3, W, GHZ, UNCLASSIFIED };

std::string label_name(OrbitLabel l);
OrbitLabel parse_label(const std::string& name);

struct Classification {
  OrbitLabel label = OrbitLabel::UNCLASSIFIED;
  /// B_200, B_020, B_002, D_000 on the normalized state.
  std::array<double, 4> values{};
  /// sqrt(value / scale), scale being the same pairing with every
  /// coefficient and amplitude replaced by its absolute value. Lies in
  /// [0, 1]; round-off leaves exact zeros near machine epsilon.
  std::array<double, 4> relative{};
  std::array<bool, 4> nonzero{};
};

/// Three-qubit SLOCC orbit from the vanishing pattern of B_200, B_020,
/// B_002, D_000. An invariant counts as nonzero when its relative size
/// exceeds tol.
Classification classify3(const State& s, double tol = 1e-9);

/// Onion order: SEPARABLE < B_i < W < GHZ, the B_i pairwise incomparable.
/// UNCLASSIFIED is comparable only with itself.
bool onion_leq(OrbitLabel a, OrbitLabel b);

}  // namespace qinv
