#pragma once

// Cursor machinery shared by the chord label and roman numeral parsers.

#include <cstddef>
#include <string>
#include <string_view>

#include "chordeval/errors.h"
#include "chordeval/note.h"

namespace chordeval::detail {

// Walks a trimmed view of the input; error offsets are reported against
// the original string via `base`.
struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t base = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  char take() { return text[pos++]; }
  bool consume(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  bool consume(std::string_view s) {
    if (text.substr(pos, s.size()) != s) return false;
    pos += s.size();
    return true;
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(message, base + pos);
  }
};

// Unmixed run of '#' or 'b', at most two. Returns the signed count.
int parse_accidental_run(Cursor& cursor);

// Accidental run followed by a step number from {1,2,3,4,5,6,7,9,11,13}.
Degree parse_degree(Cursor& cursor);

}  // namespace chordeval::detail
