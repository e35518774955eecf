#include "chordeval/report_io.h"

#include <cstdio>
#include <string_view>

namespace chordeval {

std::string format_score(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", value);
  return buffer;
}

std::string format_score(const std::optional<double>& value) {
  return value ? format_score(*value) : std::string("null");
}

namespace {

std::string json_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size() + 2);
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buffer[8];
          std::snprintf(buffer, sizeof buffer, "\\u%04x", c);
          out += buffer;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::optional<double> binary_score(
    const std::map<VocabClass, std::optional<double>>& binary, VocabClass vocab) {
  auto it = binary.find(vocab);
  return it == binary.end() ? std::nullopt : it->second;
}

std::string binary_json(const std::map<VocabClass, std::optional<double>>& binary) {
  std::string out = "{";
  bool first = true;
  for (VocabClass vocab : kAllVocabClasses) {
    if (!first) out += ", ";
    out += '"' + to_string(vocab) + "\": " + format_score(binary_score(binary, vocab));
    first = false;
  }
  out += '}';
  return out;
}

std::string skipped_json(const SkippedSeconds& skipped) {
  return "{\"unknown_label\": " + format_score(skipped.unknown_label) +
         ", \"out_of_vocab\": " + format_score(skipped.out_of_vocab) + "}";
}

std::string segment_json(const SegmentDetail& detail) {
  std::string out = "{\"start\": " + format_score(detail.start_s) +
                    ", \"end\": " + format_score(detail.end_s) +
                    ", \"reference\": \"" +
                    json_escape(render_chord_label(detail.reference)) +
                    "\", \"estimate\": \"" +
                    json_escape(render_chord_label(detail.estimate)) + "\"";
  if (detail.skip) {
    out += ", \"skipped\": \"";
    out += *detail.skip == SkipReason::unknown_label ? "unknown_label"
                                                     : "out_of_vocab";
    out += '"';
  } else {
    if (detail.comparison) {
      out += ", \"c\": " + std::to_string(detail.comparison->correct);
      out += ", \"i\": " + std::to_string(detail.comparison->insertions);
      out += ", \"raw_accuracy\": " + format_score(detail.comparison->raw_accuracy);
      out += ", \"accuracy\": " + format_score(detail.comparison->accuracy);
    }
    out += ", \"pitch_score\": " + format_score(detail.pitch_score);
  }
  out += '}';
  return out;
}

void append_track_json(std::string& out, const TrackReport& track,
                       const EvalOptions& options) {
  out += "    {\n";
  out += "      \"id\": \"" + json_escape(track.id) + "\",\n";
  out += "      \"evaluated_s\": " + format_score(track.evaluated_s) + ",\n";
  out += "      \"skipped_s\": " + skipped_json(track.skipped_s) + ",\n";
  out += "      \"pitch_accuracy\": " + format_score(track.pitch_accuracy) + ",\n";
  out += "      \"binary\": " + binary_json(track.binary);
  if (options.keep_segments && !track.segments.empty()) {
    out += ",\n      \"segments\": [\n";
    for (std::size_t i = 0; i < track.segments.size(); ++i) {
      out += "        " + segment_json(track.segments[i]);
      out += i + 1 < track.segments.size() ? ",\n" : "\n";
    }
    out += "      ]";
  }
  if (track.error) {
    out += ",\n      \"errors\": [\"" + json_escape(*track.error) + "\"]";
  }
  out += "\n    }";
}

std::string csv_escape(std::string_view field) {
  bool needs_quotes = field.find_first_of(",\"\n\r") != std::string_view::npos;
  if (!needs_quotes) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_score(const std::optional<double>& value) {
  return value ? format_score(*value) : std::string();
}

void append_csv_row(std::string& out, const std::string& id, double evaluated_s,
                    const SkippedSeconds& skipped,
                    const std::optional<double>& pitch,
                    const std::map<VocabClass, std::optional<double>>& binary,
                    const std::string& error) {
  out += csv_escape(id);
  out += ',' + format_score(evaluated_s);
  out += ',' + format_score(skipped.unknown_label);
  out += ',' + format_score(skipped.out_of_vocab);
  out += ',' + csv_score(pitch);
  for (VocabClass vocab : kAllVocabClasses) {
    out += ',' + csv_score(binary_score(binary, vocab));
  }
  out += ',' + csv_escape(error);
  out += '\n';
}

std::string binary_text(const std::map<VocabClass, std::optional<double>>& binary) {
  std::string out;
  bool first = true;
  for (VocabClass vocab : kAllVocabClasses) {
    auto score = binary_score(binary, vocab);
    if (!first) out += ' ';
    out += to_string(vocab) + "=" + (score ? format_score(*score) : "n/a");
    first = false;
  }
  return out;
}

void append_scores_text(std::string& out, double evaluated_s,
                        const SkippedSeconds& skipped,
                        const std::optional<double>& pitch,
                        const std::map<VocabClass, std::optional<double>>& binary,
                        const EvalOptions& options) {
  out += "  evaluated_s     " + format_score(evaluated_s) + "\n";
  out += "  skipped_s       unknown_label=" + format_score(skipped.unknown_label) +
         " out_of_vocab=" + format_score(skipped.out_of_vocab) + "\n";
  if (options.pitch_metric) {
    out += "  pitch_accuracy  " + (pitch ? format_score(*pitch) : std::string("n/a")) + "\n";
  }
  if (options.binary_metric && !options.vocab_classes.empty()) {
    out += "  binary          " + binary_text(binary) + "\n";
  }
}

}  // namespace

std::string render_json(const CorpusReport& report, const EvalOptions& options) {
  std::string out = "{\n  \"tracks\": [\n";
  for (std::size_t i = 0; i < report.tracks.size(); ++i) {
    append_track_json(out, report.tracks[i], options);
    out += i + 1 < report.tracks.size() ? ",\n" : "\n";
  }
  out += "  ],\n";
  out += "  \"corpus\": {\n";
  out += "    \"evaluated_s\": " + format_score(report.evaluated_s) + ",\n";
  out += "    \"skipped_s\": " + skipped_json(report.skipped_s) + ",\n";
  out += "    \"pitch_accuracy\": " + format_score(report.pitch_accuracy) + ",\n";
  out += "    \"binary\": " + binary_json(report.binary) + "\n";
  out += "  }\n}\n";
  return out;
}

std::string render_csv(const CorpusReport& report, const EvalOptions& options) {
  (void)options;
  std::string out =
      "id,evaluated_s,skipped_unknown_label_s,skipped_out_of_vocab_s,"
      "pitch_accuracy,binary_root,binary_majmin,binary_sevenths,"
      "binary_majmin_inv,binary_sevenths_inv,errors\n";
  for (const TrackReport& track : report.tracks) {
    append_csv_row(out, track.id, track.evaluated_s, track.skipped_s,
                   track.pitch_accuracy, track.binary,
                   track.error ? *track.error : std::string());
  }
  append_csv_row(out, "corpus", report.evaluated_s, report.skipped_s,
                 report.pitch_accuracy, report.binary, std::string());
  return out;
}

std::string render_text(const CorpusReport& report, const EvalOptions& options) {
  std::string out;
  for (const TrackReport& track : report.tracks) {
    out += "track " + track.id + "\n";
    if (track.error) {
      out += "  error           " + *track.error + "\n";
      continue;
    }
    append_scores_text(out, track.evaluated_s, track.skipped_s,
                       track.pitch_accuracy, track.binary, options);
    if (options.keep_segments) {
      for (const SegmentDetail& detail : track.segments) {
        out += "  segment " + format_score(detail.start_s) + " " +
               format_score(detail.end_s) + " " +
               render_chord_label(detail.reference) + " " +
               render_chord_label(detail.estimate);
        if (detail.skip) {
          out += *detail.skip == SkipReason::unknown_label
                     ? " skipped=unknown_label"
                     : " skipped=out_of_vocab";
        } else {
          if (detail.comparison) {
            out += " C=" + std::to_string(detail.comparison->correct);
            out += " I=" + std::to_string(detail.comparison->insertions);
            out += " raw_A=" + format_score(detail.comparison->raw_accuracy);
          }
          out += " score=" + (detail.pitch_score
                                  ? format_score(*detail.pitch_score)
                                  : std::string("n/a"));
        }
        out += "\n";
      }
    }
  }
  out += "corpus (" + std::to_string(report.tracks.size()) + " tracks, " +
         std::to_string(report.error_count) + " errors)\n";
  append_scores_text(out, report.evaluated_s, report.skipped_s,
                     report.pitch_accuracy, report.binary, options);
  return out;
}

}  // namespace chordeval
