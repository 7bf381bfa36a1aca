#include "qinv/state.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qinv/errors.hpp"

namespace qinv {

State::State(int k, std::vector<Complex> amplitudes) : k_(k), amplitudes_(std::move(amplitudes)) {
  if (k < 1 || k > 16) throw DimensionError("qubit count must lie in 1..16, got " + std::to_string(k));
  if (amplitudes_.size() != (std::size_t{1} << k)) {
    throw DimensionError("state with k=" + std::to_string(k) + " needs " +
                         std::to_string(std::size_t{1} << k) + " amplitudes, got " +
                         std::to_string(amplitudes_.size()));
  }
}

State State::basis(int k, std::uint32_t index) {
  const std::uint32_t idx[] = {index};
  return from_support(k, idx);
}

State State::from_support(int k, std::span<const std::uint32_t> indices) {
  if (k < 1 || k > 16) throw DimensionError("qubit count must lie in 1..16");
  std::vector<Complex> a(std::size_t{1} << k);
  for (auto i : indices) {
    if (i >= a.size()) throw DimensionError("basis index out of range");
    a[i] += 1.0;
  }
  return State(k, std::move(a));
}

double State::norm() const {
  double s = 0;
  for (auto a : amplitudes_) s += std::norm(a);
  return std::sqrt(s);
}

State State::normalized() const {
  const double n = norm();
  if (n == 0) throw ArgumentError("cannot normalize the zero state");
  std::vector<Complex> a = amplitudes_;
  for (auto& x : a) x /= n;
  return State(k_, std::move(a));
}

std::string State::to_json() const {
  nlohmann::json j;
  j["k"] = k_;
  auto arr = nlohmann::json::array();
  for (auto a : amplitudes_) arr.push_back({a.real(), a.imag()});
  j["amplitudes"] = std::move(arr);
  return j.dump();
}

State State::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ArgumentError(std::string("malformed state JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("k") || !j.contains("amplitudes")) {
    throw ArgumentError("state JSON needs fields \"k\" and \"amplitudes\"");
  }
  if (!j["k"].is_number_integer()) throw ArgumentError("\"k\" must be an integer");
  const int k = j["k"].get<int>();
  const auto& arr = j["amplitudes"];
  if (!arr.is_array()) throw ArgumentError("\"amplitudes\" must be an array");
  std::vector<Complex> a;
  a.reserve(arr.size());
  for (const auto& e : arr) {
    if (e.is_number()) {
      a.emplace_back(e.get<double>(), 0.0);
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
      a.emplace_back(e[0].get<double>(), e[1].get<double>());
    } else {
      throw ArgumentError("each amplitude must be [re, im]");
    }
  }
  return State(k, std::move(a));
}

State State::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot read state file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

Mat2 Mat2::inverse() const {
  const Complex d = det();
  if (std::abs(d) < 1e-300) throw ArgumentError("singular 2x2 matrix");
  return Mat2{{m[3] / d, -m[1] / d, -m[2] / d, m[0] / d}};
}

State sl2_action(std::span<const Mat2> g, const State& s) {
  const int k = s.k();
  if (static_cast<int>(g.size()) != k) {
    throw DimensionError("local operator tuple has " + std::to_string(g.size()) +
                         " factors for k=" + std::to_string(k));
  }
  std::vector<Complex> a = s.amplitudes();
  // a'_{..i_j..} = sum_{l} a_{..l..} (g^{-1})_{l i_j}, one slot at a time.
  for (int j = 0; j < k; ++j) {
    const Mat2 inv = g[static_cast<std::size_t>(j)].inverse();
    const std::size_t bit = std::size_t{1} << (k - 1 - j);
    for (std::size_t idx = 0; idx < a.size(); ++idx) {
      if (idx & bit) continue;
      const Complex a0 = a[idx];
      const Complex a1 = a[idx | bit];
      a[idx] = a0 * inv(0, 0) + a1 * inv(1, 0);
      a[idx | bit] = a0 * inv(0, 1) + a1 * inv(1, 1);
    }
  }
  return State(k, std::move(a));
}

AuxPoint transform_aux(std::span<const Mat2> g, const AuxPoint& x) {
  if (g.size() != x.size()) throw DimensionError("aux point and operator tuple differ in length");
  AuxPoint out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    out[j][0] = g[j](0, 0) * x[j][0] + g[j](0, 1) * x[j][1];
    out[j][1] = g[j](1, 0) * x[j][0] + g[j](1, 1) * x[j][1];
  }
  return out;
}

}  // namespace qinv
