#include "chordeval/evaluation.h"

#include <algorithm>
#include <atomic>
#include <thread>

#include "chordeval/errors.h"

namespace chordeval {

std::vector<AlignedSpan> intersect_timelines(const Timeline& reference,
                                             const Timeline& estimate) {
  std::vector<AlignedSpan> spans;
  const std::vector<Segment>& est = estimate.segments();
  std::size_t j = 0;

  for (const Segment& ref : reference.segments()) {
    double t = ref.start_s;
    while (j < est.size() && est[j].end_s <= t + kTimeEpsilonS) ++j;
    std::size_t k = j;

    while (t < ref.end_s - kTimeEpsilonS) {
      if (k < est.size() && est[k].start_s <= t + kTimeEpsilonS) {
        // Sub-tolerance slivers are dropped; k still advances, so the
        // sweep always makes progress.
        double end = std::min(ref.end_s, est[k].end_s);
        if (end > t + kTimeEpsilonS) {
          spans.push_back({t, end, ref.label, est[k].label, true});
          t = end;
        }
        if (est[k].end_s <= t + kTimeEpsilonS) ++k;
      } else {
        double end = ref.end_s;
        if (k < est.size() && est[k].start_s < end) end = est[k].start_s;
        spans.push_back({t, end, ref.label, ChordLabel::no_chord(), false});
        t = end;
      }
    }
    j = k;
  }
  return spans;
}

WeightedScore weighted_score(
    const std::vector<AlignedSpan>& spans,
    const std::function<SpanOutcome(const AlignedSpan&)>& scorer) {
  WeightedScore out;
  double numerator = 0.0;
  for (const AlignedSpan& span : spans) {
    double duration = span.duration_s();
    SpanOutcome outcome = scorer(span);
    if (outcome.skip) {
      if (*outcome.skip == SkipReason::unknown_label) {
        out.skipped_unknown_s += duration;
      } else {
        out.skipped_out_of_vocab_s += duration;
      }
      continue;
    }
    numerator += duration * *outcome.score;
    out.evaluated_s += duration;
  }
  if (out.evaluated_s > 0.0) out.score = numerator / out.evaluated_s;
  return out;
}

namespace {

bool has_binary(const EvalOptions& options) {
  return options.binary_metric && !options.vocab_classes.empty();
}

std::optional<double> pitch_span_score(const AlignedSpan& span,
                                       const EvalOptions& options,
                                       std::optional<ChordComparison>* comparison) {
  if (span.reference.kind == ChordLabel::Kind::Unknown) return std::nullopt;
  if (span.estimate.kind == ChordLabel::Kind::Unknown) return 0.0;
  ChordComparison cmp = compare_labels(span.reference, span.estimate);
  if (comparison != nullptr) *comparison = cmp;
  double score = cmp.accuracy;
  if (cmp.special_case == SpecialCase::est_empty &&
      options.empty_estimate == EmptyEstimatePolicy::zero) {
    score = 0.0;
  }
  return score;
}

}  // namespace

TrackReport evaluate_track(const Timeline& reference, const Timeline& estimate,
                           const EvalOptions& options) {
  std::vector<AlignedSpan> spans = intersect_timelines(reference, estimate);
  if (options.uncovered == UncoveredPolicy::skip) {
    std::erase_if(spans, [](const AlignedSpan& s) { return !s.estimate_covered; });
  }

  TrackReport report;

  if (options.pitch_metric) {
    report.pitch_accuracy =
        weighted_score(spans,
                       [&](const AlignedSpan& span) {
                         auto score = pitch_span_score(span, options, nullptr);
                         if (!score) return SpanOutcome::skipped(SkipReason::unknown_label);
                         return SpanOutcome::scored(*score);
                       })
            .score;
  }

  if (has_binary(options)) {
    for (VocabClass vocab : options.vocab_classes) {
      auto outcome = [&](const AlignedSpan& span) {
        if (span.reference.kind == ChordLabel::Kind::Unknown) {
          return SpanOutcome::skipped(SkipReason::unknown_label);
        }
        SimplifiedLabel truth = simplify(span.reference, vocab);
        if (truth.is_out_of_vocabulary()) {
          return SpanOutcome::skipped(SkipReason::out_of_vocab);
        }
        if (span.estimate.kind == ChordLabel::Kind::Unknown) {
          return SpanOutcome::scored(0.0);
        }
        return SpanOutcome::scored(simplify(span.estimate, vocab) == truth ? 1.0
                                                                           : 0.0);
      };
      report.binary[vocab] = weighted_score(spans, outcome).score;
    }
  }

  // Duration buckets. Evaluated time is what every selected metric scored;
  // the pitch metric additionally covers the out-of-vocabulary bucket.
  for (const AlignedSpan& span : spans) {
    double duration = span.duration_s();
    if (span.reference.kind == ChordLabel::Kind::Unknown) {
      report.skipped_s.unknown_label += duration;
      continue;
    }
    bool out_of_vocab = false;
    if (has_binary(options)) {
      for (VocabClass vocab : options.vocab_classes) {
        if (simplify(span.reference, vocab).is_out_of_vocabulary()) {
          out_of_vocab = true;
          break;
        }
      }
    }
    if (out_of_vocab) {
      report.skipped_s.out_of_vocab += duration;
    } else {
      report.evaluated_s += duration;
    }
  }

  if (options.keep_segments) {
    report.segments.reserve(spans.size());
    for (const AlignedSpan& span : spans) {
      SegmentDetail detail;
      detail.start_s = span.start_s;
      detail.end_s = span.end_s;
      detail.reference = span.reference;
      detail.estimate = span.estimate;
      if (span.reference.kind == ChordLabel::Kind::Unknown) {
        detail.skip = SkipReason::unknown_label;
      } else {
        detail.pitch_score = pitch_span_score(span, options, &detail.comparison);
      }
      report.segments.push_back(std::move(detail));
    }
  }

  return report;
}

CorpusReport evaluate_corpus(const std::vector<TrackInput>& inputs,
                             const EvalOptions& options, int jobs) {
  std::vector<TrackReport> reports(inputs.size());

  auto evaluate_one = [&](std::size_t i) {
    const TrackInput& input = inputs[i];
    TrackReport report;
    try {
      Timeline reference = load_lab_file(input.reference_path);
      Timeline estimate = load_lab_file(input.estimate_path);
      report = evaluate_track(reference, estimate, options);
    } catch (const std::exception& error) {
      report = TrackReport{};
      report.error = error.what();
    }
    report.id = input.id;
    reports[i] = std::move(report);
  };

  std::size_t worker_count =
      std::min<std::size_t>(jobs < 1 ? 1 : static_cast<std::size_t>(jobs),
                            inputs.size());
  if (worker_count <= 1) {
    for (std::size_t i = 0; i < inputs.size(); ++i) evaluate_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    for (std::size_t w = 0; w < worker_count; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < inputs.size();) {
          evaluate_one(i);
        }
      });
    }
    for (std::thread& worker : workers) worker.join();
  }

  return aggregate_corpus(std::move(reports), options);
}

CorpusReport aggregate_corpus(std::vector<TrackReport> tracks,
                              const EvalOptions& options) {
  std::sort(tracks.begin(), tracks.end(),
            [](const TrackReport& a, const TrackReport& b) { return a.id < b.id; });

  CorpusReport corpus;
  double pitch_numerator = 0.0;
  double pitch_denominator = 0.0;
  std::map<VocabClass, std::pair<double, double>> binary_sums;
  if (has_binary(options)) {
    for (VocabClass vocab : options.vocab_classes) binary_sums[vocab] = {0.0, 0.0};
  }

  for (const TrackReport& track : tracks) {
    if (track.failed()) {
      ++corpus.error_count;
      continue;
    }
    corpus.evaluated_s += track.evaluated_s;
    corpus.skipped_s.unknown_label += track.skipped_s.unknown_label;
    corpus.skipped_s.out_of_vocab += track.skipped_s.out_of_vocab;

    double weight = track.evaluated_s;
    if (weight <= 0.0) continue;
    if (track.pitch_accuracy) {
      pitch_numerator += *track.pitch_accuracy * weight;
      pitch_denominator += weight;
    }
    for (const auto& [vocab, score] : track.binary) {
      if (!score) continue;
      auto it = binary_sums.find(vocab);
      if (it == binary_sums.end()) continue;
      it->second.first += *score * weight;
      it->second.second += weight;
    }
  }

  if (options.pitch_metric && pitch_denominator > 0.0) {
    corpus.pitch_accuracy = pitch_numerator / pitch_denominator;
  }
  for (const auto& [vocab, sums] : binary_sums) {
    corpus.binary[vocab] = sums.second > 0.0
                               ? std::optional<double>(sums.first / sums.second)
                               : std::nullopt;
  }

  corpus.tracks = std::move(tracks);
  return corpus;
}

}  // namespace chordeval
