#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qinv/state.hpp"

namespace qinv {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20080417;

/// Amplitudes with independent standard complex Gaussian entries.
State random_state(int k, Rng& rng, bool normalize = true);

/// Haar-random element of U(2).
Mat2 random_u2(Rng& rng);
/// Haar-random element of SU(2).
Mat2 random_su2(Rng& rng);
/// Random element of SL(2,C): Gaussian entries rescaled to unit determinant.
Mat2 random_sl2(Rng& rng);

enum class LocalGroup { U2, SU2, SL2 };

std::vector<Mat2> random_local(int k, LocalGroup group, Rng& rng);

}  // namespace qinv
