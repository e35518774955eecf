#include "chordeval/chord_label.h"

#include <algorithm>
#include <array>

#include "chordeval/errors.h"
#include "chordeval/quality_templates.h"
#include "parse_util.h"

namespace chordeval {

namespace {

// Indexed by the Shorthand enum.
const std::array<std::string, kShorthandCount> kShorthandTokens = {
    "maj",  "min",  "dim",     "aug",  "maj7", "min7", "7",    "dim7", "hdim7",
    "minmaj7", "maj6", "min6", "sus2", "sus4", "9",    "maj9", "min9"};

void sort_degrees(std::vector<Degree>& degrees) {
  std::sort(degrees.begin(), degrees.end());
}

}  // namespace

const std::string& to_string(Shorthand shorthand) {
  return kShorthandTokens[static_cast<std::size_t>(shorthand)];
}

std::optional<Shorthand> shorthand_from_token(std::string_view token) {
  for (std::size_t i = 0; i < kShorthandTokens.size(); ++i) {
    if (kShorthandTokens[i] == token) return static_cast<Shorthand>(i);
  }
  return std::nullopt;
}

ChordLabel ChordLabel::no_chord() {
  ChordLabel label;
  label.kind = Kind::NoChord;
  return label;
}

ChordLabel ChordLabel::unknown() {
  ChordLabel label;
  label.kind = Kind::Unknown;
  return label;
}

ChordLabel ChordLabel::chord(NoteName root, Shorthand shorthand,
                             std::vector<Degree> omissions,
                             std::vector<Degree> additions,
                             std::optional<Degree> bass) {
  ChordLabel label;
  label.kind = Kind::Chord;
  label.root = root;
  label.shorthand = shorthand;
  label.omissions = std::move(omissions);
  label.additions = std::move(additions);
  label.bass = bass;
  sort_degrees(label.omissions);
  sort_degrees(label.additions);
  return label;
}

ChordLabel parse_chord_label(std::string_view text) {
  static constexpr std::string_view kWhitespace = " \t\r\n";
  std::size_t begin = text.find_first_not_of(kWhitespace);
  if (begin == std::string_view::npos) {
    throw SyntaxError("empty chord label", 0);
  }
  std::size_t end = text.find_last_not_of(kWhitespace);
  detail::Cursor cursor{text.substr(begin, end - begin + 1), 0, begin};

  if (cursor.peek() == 'N' || cursor.peek() == 'X') {
    char marker = cursor.take();
    if (!cursor.done()) cursor.fail("trailing characters after chord label");
    return marker == 'N' ? ChordLabel::no_chord() : ChordLabel::unknown();
  }

  if (!is_valid_letter(cursor.peek())) {
    cursor.fail("expected note letter A-G, 'N', or 'X'");
  }
  NoteName root{cursor.take(), 0};
  root.accidentals = detail::parse_accidental_run(cursor);

  // A bare root with no shorthand means maj.
  Shorthand shorthand = Shorthand::maj;
  if (cursor.consume(':')) {
    std::size_t token_start = cursor.pos;
    while ((cursor.peek() >= 'a' && cursor.peek() <= 'z') ||
           (cursor.peek() >= 'A' && cursor.peek() <= 'Z') ||
           (cursor.peek() >= '0' && cursor.peek() <= '9')) {
      cursor.take();
    }
    std::string_view token =
        cursor.text.substr(token_start, cursor.pos - token_start);
    if (token.empty()) {
      throw SyntaxError("missing shorthand after ':'", cursor.base + token_start);
    }
    auto parsed = shorthand_from_token(token);
    if (!parsed) {
      throw SyntaxError("unknown shorthand '" + std::string(token) + "'",
                        cursor.base + token_start);
    }
    shorthand = *parsed;
  }

  std::vector<Degree> omissions;
  std::vector<Degree> additions;
  if (cursor.consume('(')) {
    if (cursor.peek() == ')') cursor.fail("empty degree list");
    while (true) {
      bool omit = cursor.consume('*');
      std::size_t degree_start = cursor.pos;
      Degree degree = detail::parse_degree(cursor);
      if (omit) {
        // Omissions may only name degrees the shorthand actually contains.
        if (!quality_template(shorthand)
                 .intervals.contains(degree_to_semitone(degree))) {
          throw SyntaxError("omitted degree " + to_string(degree) +
                                " not present in '" + to_string(shorthand) + "'",
                            cursor.base + degree_start);
        }
        omissions.push_back(degree);
      } else {
        additions.push_back(degree);
      }
      if (cursor.consume(',')) continue;
      if (cursor.consume(')')) break;
      cursor.fail("expected ',' or ')' in degree list");
    }
  }

  std::optional<Degree> bass;
  if (cursor.consume('/')) {
    bass = detail::parse_degree(cursor);
  }

  if (!cursor.done()) cursor.fail("trailing characters after chord label");
  return ChordLabel::chord(root, shorthand, std::move(omissions),
                           std::move(additions), bass);
}

std::string render_chord_label(const ChordLabel& label) {
  switch (label.kind) {
    case ChordLabel::Kind::NoChord:
      return "N";
    case ChordLabel::Kind::Unknown:
      return "X";
    case ChordLabel::Kind::Chord:
      break;
  }

  std::string out = to_string(label.root);
  out += ':';
  out += to_string(label.shorthand);

  if (!label.omissions.empty() || !label.additions.empty()) {
    std::vector<Degree> omissions = label.omissions;
    std::vector<Degree> additions = label.additions;
    sort_degrees(omissions);
    sort_degrees(additions);
    out += '(';
    bool first = true;
    for (const Degree& degree : omissions) {
      if (!first) out += ',';
      out += '*';
      out += to_string(degree);
      first = false;
    }
    for (const Degree& degree : additions) {
      if (!first) out += ',';
      out += to_string(degree);
      first = false;
    }
    out += ')';
  }

  if (label.bass) {
    out += '/';
    out += to_string(*label.bass);
  }
  return out;
}

}  // namespace chordeval
