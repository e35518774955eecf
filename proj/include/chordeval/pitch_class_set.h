#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace chordeval {

// Set of pitch classes 0..11 (C=0), packed into the low 12 bits of a word.
// The empty set is the pitch content of a no-chord annotation.
class PitchClassSet {
 public:
  constexpr PitchClassSet() = default;
  constexpr PitchClassSet(std::initializer_list<int> pitch_classes) {
    for (int pc : pitch_classes) add(pc);
  }

  static constexpr PitchClassSet from_bits(std::uint16_t bits) {
    PitchClassSet s;
    s.bits_ = bits & kAllBits;
    return s;
  }

  constexpr void add(int pc) { bits_ |= mask(pc); }
  constexpr void remove(int pc) { bits_ &= static_cast<std::uint16_t>(~mask(pc)); }
  constexpr bool contains(int pc) const { return (bits_ & mask(pc)) != 0; }

  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr PitchClassSet intersect(PitchClassSet other) const {
    return from_bits(bits_ & other.bits_);
  }
  // this \ other
  constexpr PitchClassSet difference(PitchClassSet other) const {
    return from_bits(bits_ & static_cast<std::uint16_t>(~other.bits_));
  }
  constexpr PitchClassSet unite(PitchClassSet other) const {
    return from_bits(bits_ | other.bits_);
  }

  // Rotate every member up by `semitones` (mod 12).
  constexpr PitchClassSet transposed(int semitones) const {
    int k = ((semitones % 12) + 12) % 12;
    if (k == 0) return *this;
    std::uint32_t wide = static_cast<std::uint32_t>(bits_) << k;
    return from_bits(static_cast<std::uint16_t>((wide | (wide >> 12)) & kAllBits));
  }

  constexpr std::uint16_t bits() const { return bits_; }

  std::vector<int> to_vector() const;  // ascending members
  std::string to_string() const;       // "{0,5,9}"

  bool operator==(const PitchClassSet&) const = default;

 private:
  static constexpr std::uint16_t kAllBits = 0x0FFF;
  static constexpr std::uint16_t mask(int pc) {
    return static_cast<std::uint16_t>(1u << (((pc % 12) + 12) % 12));
  }

  std::uint16_t bits_ = 0;
};

// Cardinalities used by the accuracy metric.
int set_intersection_size(PitchClassSet a, PitchClassSet b);
int set_difference_size(PitchClassSet a, PitchClassSet b);  // |a \ b|

}  // namespace chordeval
