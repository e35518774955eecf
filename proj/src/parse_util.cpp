#include "parse_util.h"

namespace chordeval::detail {

int parse_accidental_run(Cursor& cursor) {
  int count = 0;
  if (cursor.peek() == '#') {
    while (cursor.peek() == '#') {
      if (count == 2) cursor.fail("more than two sharps");
      ++count;
      cursor.take();
    }
    if (cursor.peek() == 'b') cursor.fail("mixed sharps and flats");
  } else if (cursor.peek() == 'b') {
    while (cursor.peek() == 'b') {
      if (count == -2) cursor.fail("more than two flats");
      --count;
      cursor.take();
    }
    if (cursor.peek() == '#') cursor.fail("mixed sharps and flats");
  }
  return count;
}

Degree parse_degree(Cursor& cursor) {
  int accidentals = parse_accidental_run(cursor);
  std::size_t number_start = cursor.pos;
  int step = 0;
  while (cursor.peek() >= '0' && cursor.peek() <= '9') {
    step = step * 10 + (cursor.take() - '0');
    if (step > 99) break;
  }
  if (cursor.pos == number_start) cursor.fail("expected degree number");
  if (!is_valid_step(step)) {
    throw SyntaxError("invalid degree step " + std::to_string(step),
                      cursor.base + number_start);
  }
  return Degree{step, accidentals};
}

}  // namespace chordeval::detail
