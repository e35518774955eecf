// Tests for timeline intersection, duration-weighted scoring, and the
// track/corpus evaluation pipeline.

#include "chordeval/evaluation.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "chordeval/errors.h"
#include "chordeval/report_io.h"
#include "test_util.h"

namespace chordeval {
namespace {

Timeline lab(const std::string& text) { return parse_lab(text); }

double total_duration(const std::vector<AlignedSpan>& spans) {
  double total = 0.0;
  for (const AlignedSpan& span : spans) total += span.duration_s();
  return total;
}

TEST(IntersectTimelinesTest, SharedBoundary) {
  auto spans = intersect_timelines(lab("0.0 4.0 F:maj"),
                                   lab("0.0 2.0 F:maj\n2.0 4.0 D:min"));
  ASSERT_EQ(spans.size(), 2u);
  EXPECT_DOUBLE_EQ(spans[0].start_s, 0.0);
  EXPECT_DOUBLE_EQ(spans[0].end_s, 2.0);
  EXPECT_EQ(spans[0].estimate, parse_chord_label("F:maj"));
  EXPECT_TRUE(spans[0].estimate_covered);
  EXPECT_DOUBLE_EQ(spans[1].start_s, 2.0);
  EXPECT_DOUBLE_EQ(spans[1].end_s, 4.0);
  EXPECT_EQ(spans[1].estimate, parse_chord_label("D:min"));
}

TEST(IntersectTimelinesTest, UncoveredReferenceTimeBecomesNoChord) {
  auto spans = intersect_timelines(lab("0.0 3.0 C:maj"), lab("1.0 2.0 C:maj"));
  ASSERT_EQ(spans.size(), 3u);
  EXPECT_DOUBLE_EQ(spans[0].start_s, 0.0);
  EXPECT_DOUBLE_EQ(spans[0].end_s, 1.0);
  EXPECT_EQ(spans[0].estimate, ChordLabel::no_chord());
  EXPECT_FALSE(spans[0].estimate_covered);
  EXPECT_TRUE(spans[1].estimate_covered);
  EXPECT_DOUBLE_EQ(spans[2].start_s, 2.0);
  EXPECT_DOUBLE_EQ(spans[2].end_s, 3.0);
  EXPECT_FALSE(spans[2].estimate_covered);
}

TEST(IntersectTimelinesTest, EmptyReferenceYieldsNothing) {
  EXPECT_TRUE(intersect_timelines(Timeline{}, lab("0.0 1.0 C:maj")).empty());
}

TEST(IntersectTimelinesTest, EstimateSegmentSpanningAReferenceGap) {
  auto spans = intersect_timelines(lab("0.0 2.0 C:maj\n3.0 5.0 D:min"),
                                   lab("0.0 10.0 C:maj"));
  ASSERT_EQ(spans.size(), 2u);
  EXPECT_DOUBLE_EQ(spans[0].end_s, 2.0);
  EXPECT_DOUBLE_EQ(spans[1].start_s, 3.0);
  EXPECT_TRUE(spans[1].estimate_covered);
  EXPECT_DOUBLE_EQ(total_duration(spans), 4.0);
}

TEST(IntersectTimelinesTest, EstimateTimeOutsideTheReferenceIsIgnored) {
  auto spans = intersect_timelines(lab("1.0 2.0 C:maj"),
                                   lab("0.0 0.5 G:maj\n0.5 5.0 C:maj"));
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_DOUBLE_EQ(spans[0].start_s, 1.0);
  EXPECT_DOUBLE_EQ(spans[0].end_s, 2.0);
}

// Partition conservation over randomized timelines: the spans cover the
// reference exactly, without overlap.
TEST(IntersectTimelinesTest, PartitionConservesReferenceCoverage) {
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> step(0.01, 2.0);
  std::uniform_int_distribution<int> label_pick(0, 4);
  std::uniform_int_distribution<int> gap_pick(0, 3);
  const char* pool[] = {"C:maj", "D:min", "G:7", "N", "F#:min7/b7"};

  auto random_timeline = [&](double span) {
    std::vector<Segment> segments;
    double t = gap_pick(rng) == 0 ? step(rng) : 0.0;
    while (t < span) {
      double end = t + step(rng);
      segments.push_back({t, end, parse_chord_label(pool[label_pick(rng)])});
      t = end;
      if (gap_pick(rng) == 0) t += step(rng);
    }
    return Timeline(std::move(segments));
  };

  for (int i = 0; i < 200; ++i) {
    Timeline reference = random_timeline(20.0);
    Timeline estimate = random_timeline(20.0);
    auto spans = intersect_timelines(reference, estimate);
    ASSERT_NEAR(total_duration(spans), reference.coverage_s(), 1e-9);
    for (std::size_t s = 1; s < spans.size(); ++s) {
      ASSERT_GE(spans[s].start_s, spans[s - 1].end_s - kTimeEpsilonS);
    }
  }
}

// Segments shorter than the boundary tolerance, tucked inside the overlap
// slack of their neighbor, must neither loop nor emit negative spans.
TEST(IntersectTimelinesTest, DegenerateSliverSegmentsAreDropped) {
  ChordLabel c = parse_chord_label("C:maj");
  ChordLabel d = parse_chord_label("D:min");
  Timeline reference({{0.0, 5.0, c}});
  Timeline estimate({{0.0, 1.0, c}, {1.0 - 1e-9, 1.0 - 5e-10, d}, {2.0, 5.0, c}});

  auto spans = intersect_timelines(reference, estimate);
  for (const AlignedSpan& span : spans) {
    ASSERT_GT(span.duration_s(), 0.0);
  }
  ASSERT_NEAR(total_duration(spans), 5.0, 1e-9);
  for (std::size_t i = 1; i < spans.size(); ++i) {
    ASSERT_GE(spans[i].start_s, spans[i - 1].end_s);
  }
}

TEST(WeightedScoreTest, SinglePairCarriesItsScore) {
  std::vector<AlignedSpan> spans = {
      {0.0, 4.0, parse_chord_label("F:maj"), parse_chord_label("D:min"), true}};
  auto result = weighted_score(
      spans, [](const AlignedSpan&) { return SpanOutcome::scored(2.0 / 3.0); });
  ASSERT_TRUE(result.score.has_value());
  EXPECT_NEAR(*result.score, 2.0 / 3.0, 1e-12);
  EXPECT_DOUBLE_EQ(result.evaluated_s, 4.0);
}

TEST(WeightedScoreTest, EqualDurationsAverage) {
  std::vector<AlignedSpan> spans = {
      {0.0, 1.0, ChordLabel::no_chord(), ChordLabel::no_chord(), true},
      {1.0, 2.0, ChordLabel::no_chord(), ChordLabel::no_chord(), true}};
  int call = 0;
  auto result = weighted_score(spans, [&call](const AlignedSpan&) {
    return SpanOutcome::scored(call++ == 0 ? 1.0 : 0.0);
  });
  EXPECT_NEAR(*result.score, 0.5, 1e-12);
}

TEST(WeightedScoreTest, DurationWeightsTheMean) {
  std::vector<AlignedSpan> spans = {
      {0.0, 3.0, ChordLabel::no_chord(), ChordLabel::no_chord(), true},
      {3.0, 4.0, ChordLabel::no_chord(), ChordLabel::no_chord(), true}};
  int call = 0;
  auto result = weighted_score(spans, [&call](const AlignedSpan&) {
    return SpanOutcome::scored(call++ == 0 ? 2.0 / 3.0 : 0.0);
  });
  // (3 * 2/3 + 1 * 0) / 4
  EXPECT_NEAR(*result.score, 0.5, 1e-12);
}

TEST(WeightedScoreTest, AllSkippedIsUndefinedNotNaN) {
  std::vector<AlignedSpan> spans = {
      {0.0, 2.0, ChordLabel::unknown(), ChordLabel::no_chord(), true},
      {2.0, 3.0, ChordLabel::unknown(), ChordLabel::no_chord(), true}};
  auto result = weighted_score(spans, [](const AlignedSpan&) {
    return SpanOutcome::skipped(SkipReason::unknown_label);
  });
  EXPECT_FALSE(result.score.has_value());
  EXPECT_DOUBLE_EQ(result.evaluated_s, 0.0);
  EXPECT_DOUBLE_EQ(result.skipped_unknown_s, 3.0);

  auto empty = weighted_score({}, [](const AlignedSpan&) {
    return SpanOutcome::scored(1.0);
  });
  EXPECT_FALSE(empty.score.has_value());
}

TEST(EvaluateTrackTest, SelfComparisonScoresOneEverywhere) {
  Timeline reference = lab("0.0 2.0 F:maj\n2.0 5.0 G:min7\n5.0 6.0 N");
  TrackReport report = evaluate_track(reference, reference, EvalOptions{});
  ASSERT_TRUE(report.pitch_accuracy.has_value());
  EXPECT_DOUBLE_EQ(*report.pitch_accuracy, 1.0);
  for (VocabClass vocab : kAllVocabClasses) {
    ASSERT_TRUE(report.binary.at(vocab).has_value()) << to_string(vocab);
    EXPECT_DOUBLE_EQ(*report.binary.at(vocab), 1.0) << to_string(vocab);
  }
  EXPECT_DOUBLE_EQ(report.evaluated_s, 6.0);
  EXPECT_DOUBLE_EQ(report.skipped_s.unknown_label, 0.0);
  EXPECT_DOUBLE_EQ(report.skipped_s.out_of_vocab, 0.0);
}

TEST(EvaluateTrackTest, ContrastPairPitchVersusBinary) {
  TrackReport report =
      evaluate_track(lab("0.0 1.0 F:maj"), lab("0.0 1.0 D:min"), EvalOptions{});
  EXPECT_NEAR(*report.pitch_accuracy, 2.0 / 3.0, 1e-12);
  EXPECT_DOUBLE_EQ(*report.binary.at(VocabClass::MajMin), 0.0);
}

TEST(EvaluateTrackTest, FixtureTrackMatchesFrozenScores) {
  Timeline reference = load_lab_file(testing::fixture_path("track01.ref.lab"));
  Timeline estimate = load_lab_file(testing::fixture_path("track01.est.lab"));
  TrackReport report = evaluate_track(reference, estimate, EvalOptions{});
  EXPECT_NEAR(*report.pitch_accuracy, 43.0 / 54.0, 1e-12);
  for (VocabClass vocab : kAllVocabClasses) {
    EXPECT_NEAR(*report.binary.at(vocab), 5.0 / 9.0, 1e-12) << to_string(vocab);
  }
  EXPECT_NEAR(report.evaluated_s, 9.0, 1e-9);
}

TEST(EvaluateTrackTest, UnknownReferenceSkipsAndUnknownEstimateScoresZero) {
  Timeline reference = lab("0.0 1.0 X\n1.0 2.0 C:maj\n2.0 3.0 C:maj");
  Timeline estimate = lab("0.0 1.0 C:maj\n1.0 2.0 X\n2.0 3.0 C:maj");
  TrackReport report = evaluate_track(reference, estimate, EvalOptions{});
  // Span 1 skipped (unknown truth), span 2 scores 0, span 3 scores 1.
  EXPECT_NEAR(*report.pitch_accuracy, 0.5, 1e-12);
  EXPECT_NEAR(*report.binary.at(VocabClass::MajMin), 0.5, 1e-12);
  EXPECT_DOUBLE_EQ(report.skipped_s.unknown_label, 1.0);
  EXPECT_DOUBLE_EQ(report.evaluated_s, 2.0);
  EXPECT_LE(report.evaluated_s + report.skipped_s.unknown_label +
                report.skipped_s.out_of_vocab,
            reference.coverage_s() + 1e-9);
}

TEST(EvaluateTrackTest, OutOfVocabAccounting) {
  Timeline reference = lab("0.0 2.0 C:dim\n2.0 3.0 C:maj");
  TrackReport report = evaluate_track(reference, reference, EvalOptions{});
  // The pitch metric scores everything; the binary denominators drop dim.
  EXPECT_DOUBLE_EQ(*report.pitch_accuracy, 1.0);
  EXPECT_DOUBLE_EQ(*report.binary.at(VocabClass::MajMin), 1.0);
  EXPECT_DOUBLE_EQ(report.skipped_s.out_of_vocab, 2.0);
  EXPECT_DOUBLE_EQ(report.evaluated_s, 1.0);
  EXPECT_LE(report.evaluated_s + report.skipped_s.unknown_label +
                report.skipped_s.out_of_vocab,
            reference.coverage_s() + 1e-9);

  // RootOnly admits dim, so a pitch+root run skips nothing.
  EvalOptions root_only;
  root_only.vocab_classes = {VocabClass::RootOnly};
  TrackReport root_report = evaluate_track(reference, reference, root_only);
  EXPECT_DOUBLE_EQ(root_report.skipped_s.out_of_vocab, 0.0);
  EXPECT_DOUBLE_EQ(root_report.evaluated_s, 3.0);
}

TEST(EvaluateTrackTest, EmptyEstimatePolicies) {
  Timeline reference = lab("0.0 1.0 C:maj");
  Timeline estimate;  // nothing estimated; uncovered time becomes N

  EvalOptions formula;
  EXPECT_NEAR(*evaluate_track(reference, estimate, formula).pitch_accuracy, 0.5,
              1e-12);

  EvalOptions zero;
  zero.empty_estimate = EmptyEstimatePolicy::zero;
  EXPECT_DOUBLE_EQ(*evaluate_track(reference, estimate, zero).pitch_accuracy, 0.0);

  // An explicit N estimate scores the same way as an uncovered gap.
  EXPECT_NEAR(
      *evaluate_track(reference, lab("0.0 1.0 N"), formula).pitch_accuracy, 0.5,
      1e-12);
}

TEST(EvaluateTrackTest, UncoveredSkipPolicyDropsTheGap) {
  Timeline reference = lab("0.0 2.0 C:maj");
  Timeline estimate = lab("0.0 1.0 C:maj");

  EvalOptions skip;
  skip.uncovered = UncoveredPolicy::skip;
  TrackReport report = evaluate_track(reference, estimate, skip);
  EXPECT_DOUBLE_EQ(*report.pitch_accuracy, 1.0);
  EXPECT_DOUBLE_EQ(report.evaluated_s, 1.0);

  TrackReport default_report = evaluate_track(reference, estimate, EvalOptions{});
  EXPECT_NEAR(*default_report.pitch_accuracy, 0.75, 1e-12);  // (1 + 0.5) / 2
  EXPECT_DOUBLE_EQ(default_report.evaluated_s, 2.0);
}

// Splitting an estimate segment in two with the same label changes nothing.
TEST(EvaluateTrackTest, RefinementInvariance) {
  Timeline reference = load_lab_file(testing::fixture_path("track01.ref.lab"));
  Timeline coarse = lab("0.0 1.0 F:maj\n1.0 4.0 D:min\n4.0 6.5 N");
  Timeline fine = lab("0.0 1.0 F:maj\n1.0 2.7 D:min\n2.7 4.0 D:min\n4.0 6.5 N");

  TrackReport a = evaluate_track(reference, coarse, EvalOptions{});
  TrackReport b = evaluate_track(reference, fine, EvalOptions{});
  EXPECT_NEAR(*a.pitch_accuracy, *b.pitch_accuracy, 1e-12);
  for (VocabClass vocab : kAllVocabClasses) {
    EXPECT_NEAR(*a.binary.at(vocab), *b.binary.at(vocab), 1e-12);
  }
  EXPECT_NEAR(a.evaluated_s, b.evaluated_s, 1e-12);
}

TEST(EvaluateTrackTest, SegmentBreakdownWhenRequested) {
  EvalOptions options;
  options.keep_segments = true;
  TrackReport report = evaluate_track(lab("0.0 1.0 F:maj\n1.0 2.0 X"),
                                      lab("0.0 1.0 D:min\n1.0 2.0 C:maj"), options);
  ASSERT_EQ(report.segments.size(), 2u);
  const SegmentDetail& first = report.segments[0];
  ASSERT_TRUE(first.comparison.has_value());
  EXPECT_EQ(first.comparison->correct, 2);
  EXPECT_EQ(first.comparison->insertions, 1);
  EXPECT_NEAR(*first.pitch_score, 2.0 / 3.0, 1e-12);
  const SegmentDetail& second = report.segments[1];
  EXPECT_TRUE(second.skip.has_value());
  EXPECT_FALSE(second.comparison.has_value());

  TrackReport plain = evaluate_track(lab("0.0 1.0 F:maj"), lab("0.0 1.0 F:maj"),
                                     EvalOptions{});
  EXPECT_TRUE(plain.segments.empty());
}

// Differential check of the intersection + weighting pipeline: for random
// timelines, enumerate every boundary interval, look up the covering
// segments by midpoint, and accumulate duration-weighted scores directly.
TEST(EvaluateTrackTest, MatchesMidpointOracleOnRandomTimelines) {
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> step(0.05, 2.0);
  std::uniform_int_distribution<int> label_pick(0, 4);
  std::uniform_int_distribution<int> gap_pick(0, 3);
  const char* pool[] = {"C:maj", "D:min", "G:7", "N", "A:min7"};

  auto random_timeline = [&](double span) {
    std::vector<Segment> segments;
    double t = gap_pick(rng) == 0 ? step(rng) : 0.0;
    while (t < span) {
      double end = t + step(rng);
      segments.push_back({t, end, parse_chord_label(pool[label_pick(rng)])});
      t = end;
      if (gap_pick(rng) == 0) t += step(rng);
    }
    return Timeline(std::move(segments));
  };

  auto oracle_pitch = [](const Timeline& reference, const Timeline& estimate) {
    std::vector<double> bounds;
    for (const Segment& s : reference.segments()) {
      bounds.push_back(s.start_s);
      bounds.push_back(s.end_s);
    }
    for (const Segment& s : estimate.segments()) {
      bounds.push_back(s.start_s);
      bounds.push_back(s.end_s);
    }
    std::sort(bounds.begin(), bounds.end());

    auto covering = [](const Timeline& timeline, double t) -> const Segment* {
      for (const Segment& s : timeline.segments()) {
        if (s.start_s <= t && t < s.end_s) return &s;
      }
      return nullptr;
    };

    double numerator = 0.0;
    double denominator = 0.0;
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
      double a = bounds[i];
      double b = bounds[i + 1];
      if (b - a <= 1e-12) continue;
      const Segment* ref = covering(reference, (a + b) / 2.0);
      if (ref == nullptr) continue;
      const Segment* est = covering(estimate, (a + b) / 2.0);
      ChordLabel est_label = est != nullptr ? est->label : ChordLabel::no_chord();
      numerator += (b - a) * compare_labels(ref->label, est_label).accuracy;
      denominator += b - a;
    }
    return denominator > 0.0 ? std::optional<double>(numerator / denominator)
                             : std::nullopt;
  };

  for (int i = 0; i < 100; ++i) {
    Timeline reference = random_timeline(15.0);
    Timeline estimate = random_timeline(15.0);
    TrackReport report = evaluate_track(reference, estimate, EvalOptions{});
    std::optional<double> expected = oracle_pitch(reference, estimate);
    ASSERT_EQ(report.pitch_accuracy.has_value(), expected.has_value());
    if (expected) {
      ASSERT_NEAR(*report.pitch_accuracy, *expected, 1e-9);
    }
  }
}

TEST(EvaluateCorpusTest, SingleTrackEqualsItsScore) {
  std::vector<TrackInput> inputs = {
      {"track02", testing::fixture_path("track02.ref.lab"),
       testing::fixture_path("track02.est.lab")}};
  CorpusReport report = evaluate_corpus(inputs, EvalOptions{});
  ASSERT_EQ(report.tracks.size(), 1u);
  EXPECT_DOUBLE_EQ(*report.pitch_accuracy, *report.tracks[0].pitch_accuracy);
  EXPECT_DOUBLE_EQ(*report.pitch_accuracy, 1.0);
}

TEST(EvaluateCorpusTest, DurationWeightedAggregate) {
  std::vector<TrackInput> inputs = {
      {"track02", testing::fixture_path("track02.ref.lab"),
       testing::fixture_path("track02.est.lab")},
      {"track03", testing::fixture_path("track03.ref.lab"),
       testing::fixture_path("track03.est.lab")}};
  CorpusReport report = evaluate_corpus(inputs, EvalOptions{});
  // 10 s at 1.0 and 30 s at 0.5.
  EXPECT_NEAR(*report.pitch_accuracy, 0.625, 1e-12);
  EXPECT_DOUBLE_EQ(report.evaluated_s, 40.0);
  EXPECT_EQ(report.error_count, 0);
}

TEST(EvaluateCorpusTest, MalformedTrackIsIsolated) {
  std::vector<TrackInput> inputs = {
      {"track02", testing::fixture_path("track02.ref.lab"),
       testing::fixture_path("track02.est.lab")},
      {"trackbad", testing::fixture_path("track02.ref.lab"),
       testing::fixture_path("bad.lab")},
      {"track03", testing::fixture_path("track03.ref.lab"),
       testing::fixture_path("track03.est.lab")}};
  CorpusReport report = evaluate_corpus(inputs, EvalOptions{});
  ASSERT_EQ(report.tracks.size(), 3u);
  EXPECT_EQ(report.error_count, 1);
  EXPECT_NEAR(*report.pitch_accuracy, 0.625, 1e-12);  // bad track excluded

  const TrackReport* failed = nullptr;
  for (const TrackReport& track : report.tracks) {
    if (track.failed()) failed = &track;
  }
  ASSERT_NE(failed, nullptr);
  EXPECT_EQ(failed->id, "trackbad");
  EXPECT_NE(failed->error->find("bad.lab"), std::string::npos);
  EXPECT_FALSE(failed->pitch_accuracy.has_value());
}

TEST(EvaluateCorpusTest, TracksAreSortedById) {
  std::vector<TrackInput> inputs = {
      {"zzz", testing::fixture_path("track03.ref.lab"),
       testing::fixture_path("track03.est.lab")},
      {"aaa", testing::fixture_path("track02.ref.lab"),
       testing::fixture_path("track02.est.lab")}};
  CorpusReport report = evaluate_corpus(inputs, EvalOptions{});
  ASSERT_EQ(report.tracks.size(), 2u);
  EXPECT_EQ(report.tracks[0].id, "aaa");
  EXPECT_EQ(report.tracks[1].id, "zzz");
}

TEST(EvaluateCorpusTest, ParallelismDoesNotChangeTheBytes) {
  std::vector<TrackInput> inputs;
  for (const char* id : {"a02", "b03", "c01", "d02", "e03"}) {
    std::string stem = std::string("track0") + id[2];
    inputs.push_back({id, testing::fixture_path(stem + ".ref.lab"),
                      testing::fixture_path(stem + ".est.lab")});
  }
  EvalOptions options;
  std::string serial = render_json(evaluate_corpus(inputs, options, 1), options);
  std::string serial_again = render_json(evaluate_corpus(inputs, options, 1), options);
  std::string parallel = render_json(evaluate_corpus(inputs, options, 4), options);
  EXPECT_EQ(serial, serial_again);
  EXPECT_EQ(serial, parallel);
}

}  // namespace
}  // namespace chordeval
