#pragma once

#include <string>

namespace chordeval {

// Spelled note name: a diatonic letter plus a signed accidental count
// (sharps positive, flats negative). F# and Gb are distinct spellings of
// the same pitch class.
struct NoteName {
  char letter = 'C';    // 'A'..'G'
  int accidentals = 0;  // -2..+2

  bool operator==(const NoteName&) const = default;
};

// Chord degree relative to a root, e.g. b7 = {7, -1}.
struct Degree {
  int step = 1;         // one of 1,2,3,4,5,6,7,9,11,13
  int accidentals = 0;  // -2..+2

  bool operator==(const Degree&) const = default;
};

// Canonical degree order for rendering and the sorted-list invariant.
inline bool operator<(const Degree& a, const Degree& b) {
  if (a.step != b.step) return a.step < b.step;
  return a.accidentals < b.accidentals;
}

enum class Mode { major, minor };

struct Key {
  NoteName tonic;
  Mode mode = Mode::major;

  bool operator==(const Key&) const = default;
};

bool is_valid_letter(char letter);
bool is_valid_step(int step);

std::string to_string(const NoteName& note);  // "F#", "Bb", "C"
std::string to_string(const Degree& degree);  // "b7", "3", "#5"

}  // namespace chordeval
