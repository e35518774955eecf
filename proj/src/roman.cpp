#include "chordeval/roman.h"

#include <array>
#include <string_view>

#include "chordeval/errors.h"
#include "chordeval/pitch_classes.h"
#include "parse_util.h"

namespace chordeval {

namespace {

int mod12(int value) { return ((value % 12) + 12) % 12; }

// Longest numeral first so "VII" is not read as "V" + garbage.
struct Numeral {
  std::string_view text;
  int degree;  // 0-based
  bool uppercase;
};

constexpr std::array<Numeral, 14> kNumerals = {{
    {"III", 2, true}, {"VII", 6, true}, {"II", 1, true}, {"IV", 3, true},
    {"VI", 5, true},  {"I", 0, true},   {"V", 4, true},  {"iii", 2, false},
    {"vii", 6, false}, {"ii", 1, false}, {"iv", 3, false}, {"vi", 5, false},
    {"i", 0, false},  {"v", 4, false},
}};

// Scale-degree letter: the tonic letter advanced through the A-G cycle.
char degree_letter(char tonic_letter, int degree) {
  static constexpr std::string_view kLetters = "ABCDEFG";
  auto index = static_cast<std::size_t>(tonic_letter - 'A');
  return kLetters[(index + static_cast<std::size_t>(degree)) % 7];
}

int natural_pitch_class(char letter) {
  switch (letter) {
    case 'C': return 0;
    case 'D': return 2;
    case 'E': return 4;
    case 'F': return 5;
    case 'G': return 7;
    case 'A': return 9;
    default: return 11;  // 'B'
  }
}

}  // namespace

ChordLabel parse_roman_numeral(std::string_view text, const Key& key) {
  static constexpr std::string_view kWhitespace = " \t\r\n";
  std::size_t begin = text.find_first_not_of(kWhitespace);
  if (begin == std::string_view::npos) {
    throw SyntaxError("empty roman numeral", 0);
  }
  std::size_t end = text.find_last_not_of(kWhitespace);
  detail::Cursor cursor{text.substr(begin, end - begin + 1), 0, begin};

  int prefix = detail::parse_accidental_run(cursor);

  const Numeral* numeral = nullptr;
  for (const Numeral& candidate : kNumerals) {
    if (cursor.consume(candidate.text)) {
      numeral = &candidate;
      break;
    }
  }
  if (numeral == nullptr) cursor.fail("unknown roman numeral");

  Shorthand shorthand = numeral->uppercase ? Shorthand::maj : Shorthand::min;
  if (cursor.consume("maj7")) {
    shorthand = Shorthand::maj7;
  } else if (cursor.consume("ø7")) {  // ø7
    shorthand = Shorthand::hdim7;
  } else if (cursor.consume("°") || cursor.consume('o')) {
    shorthand = Shorthand::dim;
  } else if (cursor.consume('+')) {
    shorthand = Shorthand::aug;
  } else if (cursor.consume('7')) {
    shorthand = numeral->uppercase ? Shorthand::dom7 : Shorthand::min7;
  }
  if (!cursor.done()) cursor.fail("trailing characters after roman numeral");

  static constexpr int kMajorScale[7] = {0, 2, 4, 5, 7, 9, 11};
  static constexpr int kNaturalMinorScale[7] = {0, 2, 3, 5, 7, 8, 10};
  const int* scale = key.mode == Mode::major ? kMajorScale : kNaturalMinorScale;

  NoteName root;
  root.letter = degree_letter(key.tonic.letter, numeral->degree);
  int target_pc = mod12(pitch_class_of(key.tonic) + scale[numeral->degree] + prefix);
  int spelling = ((target_pc - natural_pitch_class(root.letter) + 6) % 12 + 12) % 12 - 6;
  if (spelling < -2 || spelling > 2) {
    throw SyntaxError("scale degree is not spellable within two accidentals", begin);
  }
  root.accidentals = spelling;

  return ChordLabel::chord(root, shorthand);
}

}  // namespace chordeval
