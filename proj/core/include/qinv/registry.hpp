#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qinv/state.hpp"

namespace qinv {

/// Group under which a registered invariant is invariant.
enum class InvariantGroup { LUT, LSUT, SLOCC };

std::string group_name(InvariantGroup g);

struct InvariantInfo {
  std::string name;
  InvariantGroup group = InvariantGroup::LUT;
  int n1 = 0;
  int n2 = 0;
};

using InvariantFunction = std::function<Complex(const State&)>;

/// Named invariants for k qubits (k = 2..6). Every k has A, the degree-4
/// LUT family ("A^2", "B_<d>", "B" for d = 0..0) and the degree-4 LSUT
/// members "C<i>", "D<i>"; even k adds the SLOCC invariant "B_0..0".
/// k = 3 adds A_111, B_200, B_020, B_002, C_111, D_000, F_222, f1..f7,
/// Delta, s2, Det. k = 4 adds the degree-6 list and the primary candidates
/// of degree 8 and 10.
std::vector<InvariantInfo> registered_invariants(int k);

/// Numeric evaluator; construction is deferred until first use and cached.
/// Throws ArgumentError for an unknown name.
InvariantFunction invariant_evaluator(int k, std::string_view name);

InvariantInfo invariant_info(int k, std::string_view name);

}  // namespace qinv
