#include "chordeval/metric.h"

#include <algorithm>

#include "chordeval/errors.h"
#include "chordeval/pitch_classes.h"

namespace chordeval {

ChordComparison compare_sets(PitchClassSet truth, PitchClassSet estimate) {
  ChordComparison result;
  result.correct = set_intersection_size(truth, estimate);
  result.insertions = set_difference_size(estimate, truth);
  result.ground_truth_size = truth.size();

  if (result.ground_truth_size == 0) {
    // The formula divides by |truth|; agreement on silence scores 1,
    // a sounding estimate against silence scores 0.
    bool agree = estimate.empty();
    result.raw_accuracy = agree ? 1.0 : 0.0;
    result.accuracy = result.raw_accuracy;
    result.special_case = agree ? SpecialCase::both_empty : SpecialCase::ref_empty;
    return result;
  }

  result.raw_accuracy =
      static_cast<double>(result.correct - result.insertions +
                          result.ground_truth_size) /
      (2.0 * result.ground_truth_size);
  result.accuracy = std::clamp(result.raw_accuracy, 0.0, 1.0);
  if (estimate.empty()) {
    result.special_case = SpecialCase::est_empty;
  }
  return result;
}

ChordComparison compare_labels(const ChordLabel& truth, const ChordLabel& estimate) {
  if (truth.kind == ChordLabel::Kind::Unknown ||
      estimate.kind == ChordLabel::Kind::Unknown) {
    throw UnsupportedLabel("cannot compare an unknown (X) label");
  }
  return compare_sets(chord_to_pitch_class_set(truth),
                      chord_to_pitch_class_set(estimate));
}

}  // namespace chordeval
