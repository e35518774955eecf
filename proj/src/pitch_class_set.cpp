#include "chordeval/pitch_class_set.h"

namespace chordeval {

std::vector<int> PitchClassSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int pc = 0; pc < 12; ++pc) {
    if (contains(pc)) out.push_back(pc);
  }
  return out;
}

std::string PitchClassSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int pc : to_vector()) {
    if (!first) out += ',';
    out += std::to_string(pc);
    first = false;
  }
  out += '}';
  return out;
}

int set_intersection_size(PitchClassSet a, PitchClassSet b) {
  return a.intersect(b).size();
}

int set_difference_size(PitchClassSet a, PitchClassSet b) {
  return a.difference(b).size();
}

}  // namespace chordeval
