#include "chordeval/pitch_classes.h"

#include "chordeval/errors.h"
#include "chordeval/quality_templates.h"

namespace chordeval {

namespace {

int mod12(int value) { return ((value % 12) + 12) % 12; }

int letter_pitch_class(char letter) {
  switch (letter) {
    case 'C': return 0;
    case 'D': return 2;
    case 'E': return 4;
    case 'F': return 5;
    case 'G': return 7;
    case 'A': return 9;
    case 'B': return 11;
    default:
      throw std::invalid_argument(std::string("invalid note letter '") +
                                  letter + "'");
  }
}

}  // namespace

int pitch_class_of(const NoteName& note) {
  return mod12(letter_pitch_class(note.letter) + note.accidentals);
}

PitchClassSet chord_to_pitch_class_set(const ChordLabel& label) {
  switch (label.kind) {
    case ChordLabel::Kind::NoChord:
      return PitchClassSet{};
    case ChordLabel::Kind::Unknown:
      throw UnsupportedLabel("unknown label (X) has no pitch content");
    case ChordLabel::Kind::Chord:
      break;
  }

  int root = pitch_class_of(label.root);
  PitchClassSet pitches = quality_template(label.shorthand).intervals.transposed(root);
  for (const Degree& degree : label.omissions) {
    pitches.remove(mod12(root + degree_to_semitone(degree)));
  }
  for (const Degree& degree : label.additions) {
    pitches.add(mod12(root + degree_to_semitone(degree)));
  }
  if (label.bass) {
    pitches.add(mod12(root + degree_to_semitone(*label.bass)));
  }
  return pitches;
}

std::array<DiatonicTriad, 7> diatonic_triads(const Key& key) {
  if (key.mode != Mode::major) {
    throw UnsupportedKey("diatonic triads are only defined for major keys");
  }

  static constexpr int kMajorScale[7] = {0, 2, 4, 5, 7, 9, 11};
  static const std::array<std::string, 7> kNumerals = {
      "I", "ii", "iii", "IV", "V", "vi", "vii°"};

  int tonic = pitch_class_of(key.tonic);
  std::array<DiatonicTriad, 7> triads;
  for (int degree = 0; degree < 7; ++degree) {
    PitchClassSet pitches;
    pitches.add(mod12(tonic + kMajorScale[degree]));
    pitches.add(mod12(tonic + kMajorScale[(degree + 2) % 7]));
    pitches.add(mod12(tonic + kMajorScale[(degree + 4) % 7]));
    triads[static_cast<std::size_t>(degree)] = {kNumerals[static_cast<std::size_t>(degree)], pitches};
  }
  return triads;
}

}  // namespace chordeval
