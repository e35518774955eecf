#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chordeval/chord_label.h"
#include "chordeval/metric.h"
#include "chordeval/timeline.h"
#include "chordeval/vocabulary.h"

namespace chordeval {

// Boundary tolerance for time comparisons: parsed decimal seconds, well
// below musical significance.
inline constexpr double kTimeEpsilonS = 1e-9;

// How to score reference time not covered by any estimate segment.
enum class UncoveredPolicy { score_as_no_chord, skip };

// Empty estimate against a sounding truth: literal formula (0.5) or zero.
enum class EmptyEstimatePolicy { formula, zero };

struct EvalOptions {
  bool pitch_metric = true;
  bool binary_metric = true;
  std::vector<VocabClass> vocab_classes = {kAllVocabClasses.begin(),
                                           kAllVocabClasses.end()};
  UncoveredPolicy uncovered = UncoveredPolicy::score_as_no_chord;
  EmptyEstimatePolicy empty_estimate = EmptyEstimatePolicy::formula;
  bool keep_segments = false;  // retain the per-segment breakdown
};

// One interval of the merged boundary partition, restricted to
// reference-covered time.
struct AlignedSpan {
  double start_s = 0.0;
  double end_s = 0.0;
  ChordLabel reference;
  ChordLabel estimate;
  bool estimate_covered = true;  // false where the estimate had a gap

  double duration_s() const { return end_s - start_s; }
};

// Merge the two timelines' boundaries over reference-covered time.
// Reference time with no estimate coverage yields estimate = NoChord and
// estimate_covered = false. Total output length equals reference coverage.
std::vector<AlignedSpan> intersect_timelines(const Timeline& reference,
                                             const Timeline& estimate);

enum class SkipReason { unknown_label, out_of_vocab };

// What a per-span scorer decided: a score in [0,1] or a skip.
struct SpanOutcome {
  std::optional<double> score;
  std::optional<SkipReason> skip;

  static SpanOutcome scored(double value) { return {value, std::nullopt}; }
  static SpanOutcome skipped(SkipReason reason) { return {std::nullopt, reason}; }
};

struct WeightedScore {
  std::optional<double> score;  // empty when no span was scored (never NaN)
  double evaluated_s = 0.0;
  double skipped_unknown_s = 0.0;
  double skipped_out_of_vocab_s = 0.0;
};

// Duration-weighted mean of the scorer over non-skipped spans.
WeightedScore weighted_score(
    const std::vector<AlignedSpan>& spans,
    const std::function<SpanOutcome(const AlignedSpan&)>& scorer);

// Per-span detail retained when EvalOptions::keep_segments is set.
// comparison is empty for spans the pitch metric could not score
// (unknown reference or unknown estimate).
struct SegmentDetail {
  double start_s = 0.0;
  double end_s = 0.0;
  ChordLabel reference;
  ChordLabel estimate;
  std::optional<ChordComparison> comparison;
  std::optional<double> pitch_score;
  std::optional<SkipReason> skip;
};

struct SkippedSeconds {
  double unknown_label = 0.0;
  double out_of_vocab = 0.0;
};

struct TrackReport {
  std::string id;
  // Time scored under every selected metric. The pitch metric additionally
  // scores out-of-vocabulary time; see the per-metric denominators.
  double evaluated_s = 0.0;
  SkippedSeconds skipped_s;
  std::optional<double> pitch_accuracy;
  std::map<VocabClass, std::optional<double>> binary;
  std::vector<SegmentDetail> segments;
  std::optional<std::string> error;  // load/parse failure; no scores

  bool failed() const { return error.has_value(); }
};

struct CorpusReport {
  std::vector<TrackReport> tracks;  // ascending id order
  double evaluated_s = 0.0;
  SkippedSeconds skipped_s;
  std::optional<double> pitch_accuracy;
  std::map<VocabClass, std::optional<double>> binary;
  int error_count = 0;
};

// Score one track: intersect the timelines once, then run the pitch
// scorer and one binary scorer per selected vocabulary class over the
// shared span list. Unknown reference labels skip their span; unknown
// estimate labels score 0 under every metric.
TrackReport evaluate_track(const Timeline& reference, const Timeline& estimate,
                           const EvalOptions& options);

struct TrackInput {
  std::string id;
  std::string reference_path;
  std::string estimate_path;
};

// Evaluate every track (in parallel when jobs > 1), then aggregate
// duration-weighted corpus scores in ascending track-id order. Per-track
// failures are recorded in the report and never abort the remaining
// tracks. Results are bit-identical regardless of jobs.
CorpusReport evaluate_corpus(const std::vector<TrackInput>& inputs,
                             const EvalOptions& options, int jobs = 1);

// Aggregate already-evaluated tracks (sorted by id) into corpus scores:
// each corpus score is sum(score * evaluated_s) / sum(evaluated_s).
CorpusReport aggregate_corpus(std::vector<TrackReport> tracks,
                              const EvalOptions& options);

}  // namespace chordeval
