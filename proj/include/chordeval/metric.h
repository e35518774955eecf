#pragma once

#include <optional>

#include "chordeval/chord_label.h"
#include "chordeval/pitch_class_set.h"

namespace chordeval {

// Degenerate comparisons where the accuracy formula needs a defined limit.
enum class SpecialCase {
  both_empty,  // truth and estimate both empty: accuracy 1
  ref_empty,   // truth empty, estimate sounding: accuracy 0
  est_empty,   // estimate empty against a sounding truth: literal formula
};

// Per-pair result of the pitch-content comparison.
struct ChordComparison {
  int correct = 0;            // |truth ∩ estimate|
  int insertions = 0;         // |estimate \ truth|
  int ground_truth_size = 0;  // |truth|
  double raw_accuracy = 0.0;  // (C - I + |truth|) / (2 |truth|), unclamped
  double accuracy = 0.0;      // raw_accuracy clamped to [0,1]
  std::optional<SpecialCase> special_case;
};

// Correct-note count, insertion count, and combined accuracy for one pair
// of pitch-class sets. Total: the |truth| = 0 cases carry a special_case
// tag instead of dividing by zero.
ChordComparison compare_sets(PitchClassSet truth, PitchClassSet estimate);

// compare_sets over the labels' pitch content. Unknown labels throw
// UnsupportedLabel; the evaluation layer decides the skip policy.
ChordComparison compare_labels(const ChordLabel& truth, const ChordLabel& estimate);

}  // namespace chordeval
