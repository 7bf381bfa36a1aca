#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qinv {

using Complex = std::complex<double>;

/// Pure k-qubit state: 2^k amplitudes indexed by the bitstring i1..ik with i1
/// as most significant bit.
class State {
 public:
  State(int k, std::vector<Complex> amplitudes);

  /// Basis state |bits>, e.g. basis(3, 0b001) = |001>.
  static State basis(int k, std::uint32_t index);
  /// Sum of the given basis states with unit coefficients (unnormalized).
  static State from_support(int k, std::span<const std::uint32_t> indices);

  int k() const { return k_; }
  std::size_t size() const { return amplitudes_.size(); }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm() const;
  State normalized() const;

  /// {"k": 3, "amplitudes": [[re, im], ...]}
  std::string to_json() const;
  static State from_json(const std::string& text);
  static State load(const std::string& path);

  friend bool operator==(const State&, const State&) = default;

 private:
  int k_;
  std::vector<Complex> amplitudes_;
};

/// Row-major 2x2 complex matrix [[m00, m01], [m10, m11]].
struct Mat2 {
  std::array<Complex, 4> m{Complex(1), Complex(0), Complex(0), Complex(1)};

  Complex operator()(int r, int c) const { return m[static_cast<std::size_t>(2 * r + c)]; }
  Complex det() const { return m[0] * m[3] - m[1] * m[2]; }
  Mat2 inverse() const;
  static Mat2 identity() { return {}; }
};

/// Image of a state under the local operator tuple g, defined by
/// sum a x = sum a' x' with x'^{(j)} = g^{(j)} x^{(j)}; that is, each slot of
/// the amplitude tensor is contracted with the inverse of g^{(j)}.
State sl2_action(std::span<const Mat2> g, const State& s);

/// Auxiliary point: one pair (x_0, x_1) per slot.
using AuxPoint = std::vector<std::array<Complex, 2>>;

/// x'^{(j)} = g^{(j)} x^{(j)}.
AuxPoint transform_aux(std::span<const Mat2> g, const AuxPoint& x);

}  // namespace qinv
