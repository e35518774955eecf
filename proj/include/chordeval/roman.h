#pragma once

#include <string_view>

#include "chordeval/chord_label.h"
#include "chordeval/note.h"

namespace chordeval {

// Roman numeral in a key: optional accidental prefix, case-sensitive
// numeral I..VII, optional quality suffix (°, o, +, 7, maj7, ø7).
// Uppercase -> maj, lowercase -> min; ° or o -> dim; + -> aug;
// 7 -> min7/7 by case; maj7 -> maj7; ø7 -> hdim7. The root is the key's
// scale degree (natural minor for minor keys) shifted by the prefix.
ChordLabel parse_roman_numeral(std::string_view text, const Key& key);

}  // namespace chordeval
