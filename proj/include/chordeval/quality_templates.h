#pragma once

#include "chordeval/chord_label.h"
#include "chordeval/note.h"
#include "chordeval/pitch_class_set.h"

namespace chordeval {

// Interval content of a chord quality: semitone offsets from the root,
// always including 0.
struct QualityTemplate {
  Shorthand shorthand;
  PitchClassSet intervals;
};

// Total over the shorthand alphabet; UnknownQuality for anything else.
const QualityTemplate& quality_template(Shorthand shorthand);

// Semitone offset of a degree above the root: 1->0, 2->2, 3->4, 4->5,
// 5->7, 6->9, 7->11, 9->2, 11->5, 13->9, shifted by the degree's
// accidentals, mod 12.
int degree_to_semitone(const Degree& degree);

}  // namespace chordeval
