#pragma once

#include <array>
#include <string>

#include "chordeval/chord_label.h"
#include "chordeval/note.h"
#include "chordeval/pitch_class_set.h"

namespace chordeval {

// Letter base {C:0, D:2, E:4, F:5, G:7, A:9, B:11} plus accidentals, mod 12.
int pitch_class_of(const NoteName& note);

// Pitch content of a label: the quality template transposed to the root,
// minus omissions, plus additions, plus the bass degree's pitch class.
// NoChord maps to the empty set; Unknown throws UnsupportedLabel.
PitchClassSet chord_to_pitch_class_set(const ChordLabel& label);

struct DiatonicTriad {
  std::string numeral;
  PitchClassSet pitches;
};

// The seven triads built on successive major-scale degrees, in order
// I, ii, iii, IV, V, vi, vii°. Minor keys throw UnsupportedKey.
std::array<DiatonicTriad, 7> diatonic_triads(const Key& key);

}  // namespace chordeval
