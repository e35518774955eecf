// Command-line front end: score a label pair, one track, or a corpus of
// time-aligned annotation files.
//
// Exit codes: 0 success, 1 I/O error, 2 parse/format/usage error,
// 3 corpus finished with per-track errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chordeval/errors.h"
#include "chordeval/evaluation.h"
#include "chordeval/metric.h"
#include "chordeval/pitch_classes.h"
#include "chordeval/report_io.h"
#include "chordeval/roman.h"
#include "chordeval/vocabulary.h"

namespace {

using namespace chordeval;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitParse = 2;
constexpr int kExitTrackErrors = 3;

struct CommonOptions {
  std::string metric = "both";
  std::vector<std::string> vocab_tokens;
  std::string format = "text";
  std::string uncovered = "nochord";
  std::string empty_estimate = "formula";
  std::string output;
  bool segments = false;
};

void add_common_flags(CLI::App* cmd, CommonOptions* common) {
  cmd->add_option("--metric", common->metric, "Metric selection")
      ->check(CLI::IsMember({"pitch", "binary", "both"}))
      ->capture_default_str();
  cmd->add_option("--vocab", common->vocab_tokens,
                  "Vocabulary class (repeatable; default: all five)")
      ->check(CLI::IsMember(
          {"root", "majmin", "sevenths", "majmin_inv", "sevenths_inv"}));
  cmd->add_option("--format", common->format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--uncovered", common->uncovered,
                  "Reference time the estimate does not cover")
      ->check(CLI::IsMember({"nochord", "skip"}))
      ->capture_default_str();
  cmd->add_option("--empty-estimate", common->empty_estimate,
                  "Empty estimate against a sounding chord")
      ->check(CLI::IsMember({"formula", "zero"}))
      ->capture_default_str();
  cmd->add_option("--output", common->output, "Write the report to a file");
}

EvalOptions build_options(const CommonOptions& common) {
  EvalOptions options;
  options.pitch_metric = common.metric != "binary";
  options.binary_metric = common.metric != "pitch";
  if (!common.vocab_tokens.empty()) {
    std::set<VocabClass> selected;
    for (const std::string& token : common.vocab_tokens) {
      selected.insert(*vocab_class_from_token(token));
    }
    options.vocab_classes.assign(selected.begin(), selected.end());
  }
  options.uncovered = common.uncovered == "skip" ? UncoveredPolicy::skip
                                                 : UncoveredPolicy::score_as_no_chord;
  options.empty_estimate = common.empty_estimate == "zero"
                               ? EmptyEstimatePolicy::zero
                               : EmptyEstimatePolicy::formula;
  options.keep_segments = common.segments;
  return options;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write output file: " + path);
  file << text;
  if (!file) throw IoError("error while writing output file: " + path);
}

Key parse_key(const std::string& text) {
  std::size_t colon = text.find(':');
  std::string note = text.substr(0, colon);
  Key key;
  key.tonic = parse_chord_label(note).root;
  if (colon != std::string::npos) {
    std::string mode = text.substr(colon + 1);
    if (mode == "maj" || mode == "major") {
      key.mode = Mode::major;
    } else if (mode == "min" || mode == "minor") {
      key.mode = Mode::minor;
    } else {
      throw SyntaxError("unknown key mode '" + mode + "'", colon + 1);
    }
  }
  return key;
}

std::string pcs_json(const PitchClassSet& set) {
  std::string out = "[";
  bool first = true;
  for (int pc : set.to_vector()) {
    if (!first) out += ", ";
    out += std::to_string(pc);
    first = false;
  }
  out += ']';
  return out;
}

std::string verdict_text(BinaryOutcome outcome) {
  switch (outcome) {
    case BinaryOutcome::Hit: return "1";
    case BinaryOutcome::Miss: return "0";
    case BinaryOutcome::Skip: return "skip";
  }
  return "skip";
}

int run_pair(const std::string& truth_text, const std::string& estimate_text,
             const std::string& key_text, const CommonOptions& common) {
  EvalOptions options = build_options(common);

  ChordLabel truth;
  ChordLabel estimate;
  if (!key_text.empty()) {
    Key key = parse_key(key_text);
    truth = parse_roman_numeral(truth_text, key);
    estimate = parse_roman_numeral(estimate_text, key);
  } else {
    truth = parse_chord_label(truth_text);
    estimate = parse_chord_label(estimate_text);
  }

  ChordComparison cmp = compare_labels(truth, estimate);
  double accuracy = cmp.accuracy;
  if (cmp.special_case == SpecialCase::est_empty &&
      options.empty_estimate == EmptyEstimatePolicy::zero) {
    accuracy = 0.0;
  }

  std::map<VocabClass, BinaryOutcome> verdicts;
  if (options.binary_metric) {
    for (VocabClass vocab : options.vocab_classes) {
      verdicts[vocab] = binary_compare(truth, estimate, vocab);
    }
  }

  PitchClassSet truth_set = chord_to_pitch_class_set(truth);
  PitchClassSet estimate_set = chord_to_pitch_class_set(estimate);
  std::string truth_rendered = render_chord_label(truth);
  std::string estimate_rendered = render_chord_label(estimate);

  std::string out;
  if (common.format == "json") {
    out += "{\n";
    out += "  \"truth\": \"" + truth_rendered + "\",\n";
    out += "  \"estimate\": \"" + estimate_rendered + "\",\n";
    out += "  \"truth_pitch_classes\": " + pcs_json(truth_set) + ",\n";
    out += "  \"estimate_pitch_classes\": " + pcs_json(estimate_set) + ",\n";
    out += "  \"c\": " + std::to_string(cmp.correct) + ",\n";
    out += "  \"i\": " + std::to_string(cmp.insertions) + ",\n";
    out += "  \"raw_accuracy\": " + format_score(cmp.raw_accuracy) + ",\n";
    out += "  \"accuracy\": " + format_score(accuracy) + ",\n";
    out += "  \"binary\": {";
    bool first = true;
    for (VocabClass vocab : kAllVocabClasses) {
      if (!first) out += ", ";
      out += '"' + to_string(vocab) + "\": ";
      auto it = verdicts.find(vocab);
      if (it == verdicts.end() || it->second == BinaryOutcome::Skip) {
        out += "null";
      } else {
        out += it->second == BinaryOutcome::Hit ? "1" : "0";
      }
      first = false;
    }
    out += "}\n}\n";
  } else if (common.format == "csv") {
    out +=
        "truth,estimate,c,i,raw_accuracy,accuracy,binary_root,binary_majmin,"
        "binary_sevenths,binary_majmin_inv,binary_sevenths_inv\n";
    out += truth_rendered + ',' + estimate_rendered + ',' +
           std::to_string(cmp.correct) + ',' + std::to_string(cmp.insertions) +
           ',' + format_score(cmp.raw_accuracy) + ',' + format_score(accuracy);
    for (VocabClass vocab : kAllVocabClasses) {
      out += ',';
      auto it = verdicts.find(vocab);
      if (it != verdicts.end() && it->second != BinaryOutcome::Skip) {
        out += it->second == BinaryOutcome::Hit ? "1" : "0";
      }
    }
    out += '\n';
  } else {
    out += "truth     " + truth_rendered + " " + truth_set.to_string() + "\n";
    out += "estimate  " + estimate_rendered + " " + estimate_set.to_string() + "\n";
    out += "C=" + std::to_string(cmp.correct) + " I=" +
           std::to_string(cmp.insertions) + " raw_A=" +
           format_score(cmp.raw_accuracy) + " A=" + format_score(accuracy) + "\n";
    if (!verdicts.empty()) {
      out += "binary    ";
      bool first = true;
      for (const auto& [vocab, verdict] : verdicts) {
        if (!first) out += ' ';
        out += to_string(vocab) + "=" + verdict_text(verdict);
        first = false;
      }
      out += "\n";
    }
  }

  write_output(out, common.output);
  return kExitOk;
}

std::string render_report(const CorpusReport& report, const EvalOptions& options,
                          const std::string& format) {
  if (format == "json") return render_json(report, options);
  if (format == "csv") return render_csv(report, options);
  return render_text(report, options);
}

int run_track(const std::string& reference_path, const std::string& estimate_path,
              const CommonOptions& common) {
  EvalOptions options = build_options(common);
  Timeline reference = load_lab_file(reference_path);
  Timeline estimate = load_lab_file(estimate_path);

  TrackReport track = evaluate_track(reference, estimate, options);
  track.id = std::filesystem::path(reference_path).stem().string();
  CorpusReport report = aggregate_corpus({std::move(track)}, options);

  write_output(render_report(report, options, common.format), common.output);
  return kExitOk;
}

std::vector<TrackInput> load_manifest(const std::string& path) {
  std::ifstream stream(path);
  if (!stream) throw IoError("cannot open manifest: " + path);

  std::filesystem::path base = std::filesystem::path(path).parent_path();
  auto resolve = [&base](const std::string& p) {
    std::filesystem::path candidate(p);
    return candidate.is_absolute() ? candidate.string()
                                   : (base / candidate).string();
  };

  std::vector<TrackInput> inputs;
  std::string line;
  int line_number = 0;
  while (std::getline(stream, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string id, reference, estimate, extra;
    if (!(fields >> id)) continue;
    if (id.front() == '#') continue;
    if (!(fields >> reference >> estimate) || (fields >> extra)) {
      throw FormatError("manifest line " + std::to_string(line_number) +
                            ": expected 'id reference estimate'",
                        line_number);
    }
    inputs.push_back({id, resolve(reference), resolve(estimate)});
  }
  return inputs;
}

std::vector<TrackInput> pair_directories(const std::string& reference_dir,
                                         const std::string& estimate_dir) {
  namespace fs = std::filesystem;
  auto collect = [](const std::string& dir) {
    if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir);
    std::map<std::string, std::string> by_stem;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (!entry.is_regular_file() || entry.path().extension() != ".lab") continue;
      by_stem[entry.path().stem().string()] = entry.path().string();
    }
    return by_stem;
  };

  std::map<std::string, std::string> reference = collect(reference_dir);
  std::map<std::string, std::string> estimate = collect(estimate_dir);

  std::vector<std::string> unmatched;
  for (const auto& [stem, path] : reference) {
    if (!estimate.count(stem)) unmatched.push_back(stem + " (no estimate)");
  }
  for (const auto& [stem, path] : estimate) {
    if (!reference.count(stem)) unmatched.push_back(stem + " (no reference)");
  }
  if (!unmatched.empty()) {
    std::string message = "unmatched file stems:";
    for (const std::string& stem : unmatched) message += ' ' + stem;
    throw FormatError(message, 0);
  }

  std::vector<TrackInput> inputs;
  for (const auto& [stem, path] : reference) {
    inputs.push_back({stem, path, estimate.at(stem)});
  }
  return inputs;
}

int run_corpus(const std::string& manifest, const std::string& reference_dir,
               const std::string& estimate_dir, int jobs,
               const CommonOptions& common) {
  std::vector<TrackInput> inputs;
  if (!manifest.empty()) {
    inputs = load_manifest(manifest);
  } else {
    inputs = pair_directories(reference_dir, estimate_dir);
  }
  if (inputs.empty()) {
    std::cerr << "chordeval: no tracks to evaluate\n";
    return kExitParse;
  }

  EvalOptions options = build_options(common);
  CorpusReport report = evaluate_corpus(inputs, options, jobs);
  write_output(render_report(report, options, common.format), common.output);
  return report.error_count > 0 ? kExitTrackErrors : kExitOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Chord estimation scoring by shared pitch-class content"};
  app.require_subcommand(1);

  CommonOptions common;
  std::string truth_text;
  std::string estimate_text;
  std::string key_text;
  std::string reference_path;
  std::string estimate_path;
  std::string manifest;
  std::string reference_dir;
  std::string estimate_dir;
  int jobs = 1;

  CLI::App* pair_cmd =
      app.add_subcommand("pair", "Score one estimated label against the truth");
  pair_cmd->add_option("truth", truth_text, "Ground-truth chord label")->required();
  pair_cmd->add_option("estimate", estimate_text, "Estimated chord label")->required();
  pair_cmd->add_option("--key", key_text,
                       "Interpret both labels as roman numerals in this key "
                       "(e.g. C:maj, A:min)");
  add_common_flags(pair_cmd, &common);

  CLI::App* track_cmd =
      app.add_subcommand("track", "Score one estimate file against a reference file");
  track_cmd->add_option("reference", reference_path, "Reference .lab file")->required();
  track_cmd->add_option("estimate", estimate_path, "Estimate .lab file")->required();
  track_cmd->add_flag("--segments", common.segments,
                      "Include the per-segment breakdown");
  add_common_flags(track_cmd, &common);

  CLI::App* corpus_cmd =
      app.add_subcommand("corpus", "Score a corpus of reference/estimate files");
  corpus_cmd->add_option("--manifest", manifest,
                         "Manifest file: one 'id reference estimate' per line");
  corpus_cmd->add_option("reference_dir", reference_dir,
                         "Directory of reference .lab files");
  corpus_cmd->add_option("estimate_dir", estimate_dir,
                         "Directory of estimate .lab files, matched by stem");
  corpus_cmd->add_option("--jobs", jobs, "Parallel track evaluations")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  corpus_cmd->add_flag("--segments", common.segments,
                       "Include the per-segment breakdown");
  add_common_flags(corpus_cmd, &common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (pair_cmd->parsed()) {
      return run_pair(truth_text, estimate_text, key_text, common);
    }
    if (track_cmd->parsed()) {
      return run_track(reference_path, estimate_path, common);
    }
    if (manifest.empty() && (reference_dir.empty() || estimate_dir.empty())) {
      std::cerr << "chordeval: corpus needs --manifest or two directories\n";
      return kExitParse;
    }
    return run_corpus(manifest, reference_dir, estimate_dir, jobs, common);
  } catch (const IoError& error) {
    std::cerr << "chordeval: " << error.what() << "\n";
    return kExitIo;
  } catch (const SyntaxError& error) {
    std::cerr << "chordeval: " << error.what() << " (offset "
              << error.offset() << ")\n";
    return kExitParse;
  } catch (const std::exception& error) {
    std::cerr << "chordeval: " << error.what() << "\n";
    return kExitParse;
  }
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& error) {
    std::cerr << "chordeval: " << error.what() << "\n";
    return kExitParse;
  } catch (...) {
    std::cerr << "chordeval: unexpected error\n";
    return kExitParse;
  }
}
