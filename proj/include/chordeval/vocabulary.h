#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "chordeval/chord_label.h"
#include "chordeval/note.h"

namespace chordeval {

// The five evaluation vocabulary classes, in order of increasing detail.
enum class VocabClass {
  RootOnly,
  MajMin,
  Sevenths,
  MajMinInv,
  SeventhsInv,
};

inline constexpr std::array<VocabClass, 5> kAllVocabClasses = {
    VocabClass::RootOnly,    VocabClass::MajMin,      VocabClass::Sevenths,
    VocabClass::MajMinInv,   VocabClass::SeventhsInv,
};

// Report/CLI tokens: root, majmin, sevenths, majmin_inv, sevenths_inv.
const std::string& to_string(VocabClass vocab);
std::optional<VocabClass> vocab_class_from_token(std::string_view token);

// A chord label reduced to a class's alphabet. Quality is empty for
// RootOnly; bass is only ever set by the inversion classes.
struct SimplifiedLabel {
  enum class Kind { Chord, NoChord, OutOfVocabulary };

  Kind kind = Kind::NoChord;
  int root_pc = 0;
  std::optional<Shorthand> quality;
  std::optional<Degree> bass;

  static SimplifiedLabel no_chord();
  static SimplifiedLabel out_of_vocabulary();

  bool is_out_of_vocabulary() const { return kind == Kind::OutOfVocabulary; }

  bool operator==(const SimplifiedLabel&) const = default;
};

// Reduce a label to the class's alphabet. N maps to NoChord in every
// class; qualities outside the class map to OutOfVocabulary; inversion
// classes restrict the bass to the class's listed degrees. Unknown
// labels throw UnsupportedLabel.
SimplifiedLabel simplify(const ChordLabel& label, VocabClass vocab);

enum class BinaryOutcome { Miss = 0, Hit = 1, Skip };

// Baseline label comparison: Skip when the truth is out of vocabulary or
// either side is Unknown; otherwise Hit iff both sides simplify equal.
BinaryOutcome binary_compare(const ChordLabel& truth, const ChordLabel& estimate,
                             VocabClass vocab);

// Chord label carrying the same information as a simplified label, with a
// sharp-spelled root. OutOfVocabulary throws UnsupportedLabel.
ChordLabel to_chord_label(const SimplifiedLabel& label);

}  // namespace chordeval
