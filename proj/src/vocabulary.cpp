#include "chordeval/vocabulary.h"

#include <array>

#include "chordeval/errors.h"
#include "chordeval/pitch_classes.h"

namespace chordeval {

namespace {

const std::array<std::string, 5> kVocabTokens = {
    "root", "majmin", "sevenths", "majmin_inv", "sevenths_inv"};

enum class ThirdFamily { major_third, minor_third, excluded };

ThirdFamily third_family(Shorthand shorthand) {
  switch (shorthand) {
    case Shorthand::maj:
    case Shorthand::maj7:
    case Shorthand::dom7:
    case Shorthand::maj6:
    case Shorthand::dom9:
    case Shorthand::maj9:
      return ThirdFamily::major_third;
    case Shorthand::min:
    case Shorthand::min7:
    case Shorthand::minmaj7:
    case Shorthand::min6:
    case Shorthand::min9:
      return ThirdFamily::minor_third;
    case Shorthand::dim:
    case Shorthand::aug:
    case Shorthand::dim7:
    case Shorthand::hdim7:
    case Shorthand::sus2:
    case Shorthand::sus4:
      return ThirdFamily::excluded;
  }
  return ThirdFamily::excluded;
}

// Longest stacked-third prefix representable in {maj, min, maj7, min7, 7}:
// sixths drop to triads, ninths drop to sevenths, minmaj7 drops to min.
Shorthand sevenths_quality(Shorthand shorthand) {
  switch (shorthand) {
    case Shorthand::maj7:
    case Shorthand::maj9:
      return Shorthand::maj7;
    case Shorthand::min7:
    case Shorthand::min9:
      return Shorthand::min7;
    case Shorthand::dom7:
    case Shorthand::dom9:
      return Shorthand::dom7;
    case Shorthand::min:
    case Shorthand::min6:
    case Shorthand::minmaj7:
      return Shorthand::min;
    default:
      return Shorthand::maj;
  }
}

bool is_root_position(const std::optional<Degree>& bass) {
  return !bass.has_value() || *bass == Degree{1, 0};
}

bool bass_allowed(VocabClass vocab, Shorthand quality, const Degree& bass) {
  const Degree third{3, 0};
  const Degree flat_third{3, -1};
  const Degree fifth{5, 0};
  const Degree seventh{7, 0};
  const Degree flat_seventh{7, -1};

  // Triad inversions, shared by both inversion classes.
  if (quality == Shorthand::maj && (bass == third || bass == fifth)) return true;
  if (quality == Shorthand::min && (bass == flat_third || bass == fifth)) return true;
  if (vocab == VocabClass::MajMinInv) return false;

  // SeventhsInv adds the seventh-chord inversions.
  if (quality == Shorthand::maj7 &&
      (bass == third || bass == fifth || bass == seventh)) {
    return true;
  }
  if (quality == Shorthand::min7 &&
      (bass == flat_third || bass == fifth || bass == flat_seventh)) {
    return true;
  }
  if (quality == Shorthand::dom7 &&
      (bass == third || bass == fifth || bass == flat_seventh)) {
    return true;
  }
  return false;
}

}  // namespace

const std::string& to_string(VocabClass vocab) {
  return kVocabTokens[static_cast<std::size_t>(vocab)];
}

std::optional<VocabClass> vocab_class_from_token(std::string_view token) {
  for (std::size_t i = 0; i < kVocabTokens.size(); ++i) {
    if (kVocabTokens[i] == token) return static_cast<VocabClass>(i);
  }
  return std::nullopt;
}

SimplifiedLabel SimplifiedLabel::no_chord() { return SimplifiedLabel{}; }

SimplifiedLabel SimplifiedLabel::out_of_vocabulary() {
  SimplifiedLabel label;
  label.kind = Kind::OutOfVocabulary;
  return label;
}

SimplifiedLabel simplify(const ChordLabel& label, VocabClass vocab) {
  switch (label.kind) {
    case ChordLabel::Kind::Unknown:
      throw UnsupportedLabel("unknown label (X) has no vocabulary mapping");
    case ChordLabel::Kind::NoChord:
      return SimplifiedLabel::no_chord();
    case ChordLabel::Kind::Chord:
      break;
  }

  SimplifiedLabel out;
  out.kind = SimplifiedLabel::Kind::Chord;
  out.root_pc = pitch_class_of(label.root);
  if (vocab == VocabClass::RootOnly) return out;

  ThirdFamily family = third_family(label.shorthand);
  if (family == ThirdFamily::excluded) return SimplifiedLabel::out_of_vocabulary();

  switch (vocab) {
    case VocabClass::MajMin:
    case VocabClass::MajMinInv:
      out.quality = family == ThirdFamily::major_third ? Shorthand::maj
                                                       : Shorthand::min;
      break;
    default:
      out.quality = sevenths_quality(label.shorthand);
      break;
  }

  if (vocab == VocabClass::MajMin || vocab == VocabClass::Sevenths) return out;

  if (is_root_position(label.bass)) return out;
  if (!bass_allowed(vocab, *out.quality, *label.bass)) {
    return SimplifiedLabel::out_of_vocabulary();
  }
  out.bass = label.bass;
  return out;
}

BinaryOutcome binary_compare(const ChordLabel& truth, const ChordLabel& estimate,
                             VocabClass vocab) {
  if (truth.kind == ChordLabel::Kind::Unknown ||
      estimate.kind == ChordLabel::Kind::Unknown) {
    return BinaryOutcome::Skip;
  }
  SimplifiedLabel simplified_truth = simplify(truth, vocab);
  if (simplified_truth.is_out_of_vocabulary()) return BinaryOutcome::Skip;
  return simplify(estimate, vocab) == simplified_truth ? BinaryOutcome::Hit
                                                       : BinaryOutcome::Miss;
}

ChordLabel to_chord_label(const SimplifiedLabel& label) {
  switch (label.kind) {
    case SimplifiedLabel::Kind::NoChord:
      return ChordLabel::no_chord();
    case SimplifiedLabel::Kind::OutOfVocabulary:
      throw UnsupportedLabel("out-of-vocabulary label has no chord form");
    case SimplifiedLabel::Kind::Chord:
      break;
  }

  static constexpr struct {
    char letter;
    int accidentals;
  } kSharpSpellings[12] = {{'C', 0}, {'C', 1}, {'D', 0}, {'D', 1},
                           {'E', 0}, {'F', 0}, {'F', 1}, {'G', 0},
                           {'G', 1}, {'A', 0}, {'A', 1}, {'B', 0}};

  const auto& spelling = kSharpSpellings[((label.root_pc % 12) + 12) % 12];
  NoteName root{spelling.letter, spelling.accidentals};
  return ChordLabel::chord(root, label.quality.value_or(Shorthand::maj), {}, {},
                           label.bass);
}

}  // namespace chordeval
