#include "chordeval/timeline.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "chordeval/errors.h"
#include "chordeval/evaluation.h"

namespace chordeval {

Timeline::Timeline(std::vector<Segment> segments) : segments_(std::move(segments)) {
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const Segment& segment = segments_[i];
    if (segment.start_s < 0.0) {
      throw OrderError("segment " + std::to_string(i) + " starts before 0");
    }
    if (segment.end_s <= segment.start_s) {
      throw OrderError("segment " + std::to_string(i) +
                       " has non-positive duration");
    }
    if (i > 0 && segment.start_s < segments_[i - 1].end_s - kTimeEpsilonS) {
      throw OrderError("segment " + std::to_string(i) +
                       " overlaps the previous segment");
    }
  }
}

double Timeline::coverage_s() const {
  double total = 0.0;
  for (const Segment& segment : segments_) total += segment.duration_s();
  return total;
}

double Timeline::span_s() const {
  return segments_.empty() ? 0.0 : segments_.back().end_s;
}

namespace {

bool is_blank_or_comment(std::string_view line) {
  std::size_t first = line.find_first_not_of(" \t");
  return first == std::string_view::npos || line[first] == '#';
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    pos = line.find_first_not_of(" \t", pos);
    if (pos == std::string_view::npos) break;
    std::size_t end = line.find_first_of(" \t", pos);
    if (end == std::string_view::npos) end = line.size();
    fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

double parse_time(std::string_view field, int line_number, const char* what) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() ||
      !std::isfinite(value)) {
    throw FormatError("line " + std::to_string(line_number) + ": " + what +
                          " time '" + std::string(field) + "' is not a number",
                      line_number);
  }
  return value;
}

}  // namespace

Timeline parse_lab(std::string_view text) {
  std::vector<Segment> segments;
  int line_number = 0;
  std::size_t pos = 0;

  while (pos <= text.size()) {
    std::size_t newline = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, newline == std::string_view::npos ? text.size() - pos : newline - pos);
    pos = newline == std::string_view::npos ? text.size() + 1 : newline + 1;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (is_blank_or_comment(line)) continue;

    std::vector<std::string_view> fields = split_fields(line);
    if (fields.size() != 3) {
      throw FormatError("line " + std::to_string(line_number) + ": expected " +
                            "'start end label', got " +
                            std::to_string(fields.size()) + " fields",
                        line_number);
    }

    Segment segment;
    segment.start_s = parse_time(fields[0], line_number, "start");
    segment.end_s = parse_time(fields[1], line_number, "end");
    if (segment.start_s < 0.0) {
      throw FormatError("line " + std::to_string(line_number) +
                            ": start time is negative",
                        line_number);
    }
    if (segment.end_s <= segment.start_s) {
      throw OrderError("line " + std::to_string(line_number) +
                           ": segment end does not follow its start",
                       line_number);
    }
    if (!segments.empty() &&
        segment.start_s < segments.back().end_s - kTimeEpsilonS) {
      throw OrderError("line " + std::to_string(line_number) +
                           ": segment overlaps or precedes the previous one",
                       line_number);
    }

    try {
      segment.label = parse_chord_label(fields[2]);
    } catch (const SyntaxError& error) {
      throw SyntaxError("line " + std::to_string(line_number) + ": " +
                            error.what(),
                        error.offset());
    }
    segments.push_back(std::move(segment));
  }

  return Timeline(std::move(segments));
}

Timeline load_lab_file(const std::string& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) {
    throw IoError("cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  if (stream.bad()) {
    throw IoError("cannot read file: " + path);
  }

  try {
    return parse_lab(buffer.str());
  } catch (const SyntaxError& error) {
    throw SyntaxError(path + ": " + error.what(), error.offset());
  } catch (const FormatError& error) {
    throw FormatError(path + ": " + error.what(), error.line());
  } catch (const OrderError& error) {
    throw OrderError(path + ": " + error.what(), error.line());
  }
}

}  // namespace chordeval
