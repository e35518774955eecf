#include "chordeval/note.h"

namespace chordeval {

bool is_valid_letter(char letter) { return letter >= 'A' && letter <= 'G'; }

bool is_valid_step(int step) {
  switch (step) {
    case 1:
    case 2:
    case 3:
    case 4:
    case 5:
    case 6:
    case 7:
    case 9:
    case 11:
    case 13:
      return true;
    default:
      return false;
  }
}

namespace {

void append_accidentals(std::string& out, int accidentals) {
  for (int i = 0; i < accidentals; ++i) out += '#';
  for (int i = 0; i > accidentals; --i) out += 'b';
}

}  // namespace

std::string to_string(const NoteName& note) {
  std::string out(1, note.letter);
  append_accidentals(out, note.accidentals);
  return out;
}

std::string to_string(const Degree& degree) {
  std::string out;
  append_accidentals(out, degree.accidentals);
  out += std::to_string(degree.step);
  return out;
}

}  // namespace chordeval
