#include "chordeval/quality_templates.h"

#include <array>
#include <stdexcept>

#include "chordeval/errors.h"

namespace chordeval {

int degree_to_semitone(const Degree& degree) {
  int base;
  switch (degree.step) {
    case 1: base = 0; break;
    case 2: base = 2; break;
    case 3: base = 4; break;
    case 4: base = 5; break;
    case 5: base = 7; break;
    case 6: base = 9; break;
    case 7: base = 11; break;
    case 9: base = 2; break;   // octave extensions fold mod 12
    case 11: base = 5; break;
    case 13: base = 9; break;
    default:
      throw std::invalid_argument("invalid degree step " +
                                  std::to_string(degree.step));
  }
  return (((base + degree.accidentals) % 12) + 12) % 12;
}

const QualityTemplate& quality_template(Shorthand shorthand) {
  // Indexed by the Shorthand enum.
  static const std::array<QualityTemplate, kShorthandCount> kTemplates = {{
      {Shorthand::maj, {0, 4, 7}},
      {Shorthand::min, {0, 3, 7}},
      {Shorthand::dim, {0, 3, 6}},
      {Shorthand::aug, {0, 4, 8}},
      {Shorthand::maj7, {0, 4, 7, 11}},
      {Shorthand::min7, {0, 3, 7, 10}},
      {Shorthand::dom7, {0, 4, 7, 10}},
      {Shorthand::dim7, {0, 3, 6, 9}},
      {Shorthand::hdim7, {0, 3, 6, 10}},
      {Shorthand::minmaj7, {0, 3, 7, 11}},
      {Shorthand::maj6, {0, 4, 7, 9}},
      {Shorthand::min6, {0, 3, 7, 9}},
      {Shorthand::sus2, {0, 2, 7}},
      {Shorthand::sus4, {0, 5, 7}},
      {Shorthand::dom9, {0, 2, 4, 7, 10}},
      {Shorthand::maj9, {0, 2, 4, 7, 11}},
      {Shorthand::min9, {0, 2, 3, 7, 10}},
  }};

  auto index = static_cast<std::size_t>(shorthand);
  if (index >= kTemplates.size() || kTemplates[index].shorthand != shorthand) {
    throw UnknownQuality("no interval template for shorthand");
  }
  return kTemplates[index];
}

}  // namespace chordeval
