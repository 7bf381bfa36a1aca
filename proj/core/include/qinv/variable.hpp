#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace qinv {

enum class VarKind : std::uint8_t { Amp = 0, AmpConj = 1, Aux = 2 };

/// Working copy of an auxiliary variable. Primed copies only exist inside a
/// transvection and never appear in a returned covariant.
enum class AuxCopy : std::uint8_t { Plain = 0, Prime = 1, DoublePrime = 2 };

/// Packed identifier of a polynomial variable.
///
/// Amplitudes a_{i1..ik} and their conjugates are indexed by the integer value
/// of the bitstring with i1 as most significant bit. Auxiliary variables
/// x^{(j)}_b carry a 0-based slot j, a component b in {0,1} and a copy tag.
/// The packed code orders kinds Amp < AmpConj < Aux, then amplitudes by
/// bitstring and auxiliaries by (slot, component, copy).
class VariableId {
 public:
  static constexpr int kMaxQubits = 16;

  static constexpr VariableId amp(std::uint32_t index) { return VariableId(index); }
  static constexpr VariableId amp_conj(std::uint32_t index) {
    return VariableId((1u << kKindShift) | index);
  }
  static constexpr VariableId aux(int slot, int component, AuxCopy copy = AuxCopy::Plain) {
    return VariableId((2u << kKindShift) | (static_cast<std::uint32_t>(slot) << 3) |
                      (static_cast<std::uint32_t>(component) << 2) |
                      static_cast<std::uint32_t>(copy));
  }
  static constexpr VariableId from_code(std::uint32_t code) { return VariableId(code); }

  constexpr VarKind kind() const { return static_cast<VarKind>(code_ >> kKindShift); }
  constexpr bool is_amp() const { return kind() == VarKind::Amp; }
  constexpr bool is_amp_conj() const { return kind() == VarKind::AmpConj; }
  constexpr bool is_aux() const { return kind() == VarKind::Aux; }

  /// Bitstring index; meaningful for Amp and AmpConj.
  constexpr std::uint32_t index() const { return code_ & kIndexMask; }
  /// 0-based slot; meaningful for Aux.
  constexpr int slot() const { return static_cast<int>((code_ & kIndexMask) >> 3); }
  constexpr int component() const { return static_cast<int>((code_ >> 2) & 1u); }
  constexpr AuxCopy copy() const { return static_cast<AuxCopy>(code_ & 3u); }

  constexpr VariableId with_copy(AuxCopy c) const {
    return VariableId((code_ & ~3u) | static_cast<std::uint32_t>(c));
  }
  /// Amp <-> AmpConj; auxiliaries are returned unchanged.
  constexpr VariableId conjugated() const {
    if (is_amp()) return amp_conj(index());
    if (is_amp_conj()) return amp(index());
    return *this;
  }

  constexpr std::uint32_t code() const { return code_; }

  /// "a[010]", "abar[010]", "x2_1", "x2_1'" (slots printed 1-based).
  std::string name(int k) const;

  friend constexpr auto operator<=>(VariableId, VariableId) = default;

 private:
  static constexpr int kKindShift = 20;
  static constexpr std::uint32_t kIndexMask = (1u << kKindShift) - 1;
  constexpr explicit VariableId(std::uint32_t code) : code_(code) {}
  std::uint32_t code_;
};

/// Bitstring of `index` written with i1 first, e.g. (k=3, 1) -> "001".
std::string bitstring(std::uint32_t index, int k);

}  // namespace qinv
