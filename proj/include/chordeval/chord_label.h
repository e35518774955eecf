#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chordeval/note.h"

namespace chordeval {

// Chord quality shorthands. dom7/dom9 are spelled "7"/"9" in label text.
enum class Shorthand {
  maj,
  min,
  dim,
  aug,
  maj7,
  min7,
  dom7,
  dim7,
  hdim7,
  minmaj7,
  maj6,
  min6,
  sus2,
  sus4,
  dom9,
  maj9,
  min9,
};

inline constexpr int kShorthandCount = 17;

const std::string& to_string(Shorthand shorthand);
std::optional<Shorthand> shorthand_from_token(std::string_view token);

// Structured chord label. For Chord labels, omissions and additions are
// kept sorted by (step, accidentals); parse_chord_label normalizes and
// hand-built labels should use the chord() factory, which sorts.
struct ChordLabel {
  enum class Kind { Chord, NoChord, Unknown };

  Kind kind = Kind::NoChord;
  NoteName root;
  Shorthand shorthand = Shorthand::maj;
  std::vector<Degree> omissions;
  std::vector<Degree> additions;
  std::optional<Degree> bass;

  static ChordLabel no_chord();
  static ChordLabel unknown();
  static ChordLabel chord(NoteName root, Shorthand shorthand,
                          std::vector<Degree> omissions = {},
                          std::vector<Degree> additions = {},
                          std::optional<Degree> bass = std::nullopt);

  bool is_chord() const { return kind == Kind::Chord; }

  bool operator==(const ChordLabel&) const = default;
};

// Grammar: `N` | `X` | ROOT [":" SHORTHAND] ["(" degree-list ")"] ["/" DEGREE]
// ROOT is a letter A-G plus an unmixed run of `#` or `b` (at most two);
// degree-list entries may carry a `*` prefix marking an omission; a bare
// ROOT with no shorthand means maj. Throws SyntaxError with a byte offset.
ChordLabel parse_chord_label(std::string_view text);

// Canonical text form: shorthand always printed, omissions before
// additions, each sorted by step. parse(render(x)) == x for valid labels.
std::string render_chord_label(const ChordLabel& label);

}  // namespace chordeval
