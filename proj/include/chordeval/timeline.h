#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chordeval/chord_label.h"

namespace chordeval {

// Time interval carrying one chord label. Times in seconds.
struct Segment {
  double start_s = 0.0;
  double end_s = 0.0;
  ChordLabel label;

  double duration_s() const { return end_s - start_s; }
};

// Ordered, non-overlapping segments; gaps are allowed.
class Timeline {
 public:
  Timeline() = default;
  // Validates ordering and positive durations; OrderError otherwise.
  explicit Timeline(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const { return segments_; }
  bool empty() const { return segments_.empty(); }
  std::size_t size() const { return segments_.size(); }

  double coverage_s() const;  // sum of segment durations
  double span_s() const;      // end of the last segment, 0 when empty

 private:
  std::vector<Segment> segments_;
};

// One segment per line: `start end label`, whitespace-separated, decimal
// seconds. Blank lines and `#` comments are ignored. FormatError carries
// the 1-based line number; label SyntaxErrors are rethrown with line
// context; ordering problems raise OrderError.
Timeline parse_lab(std::string_view text);

// parse_lab over a file's contents; IoError when unreadable. Parse errors
// are rethrown with the path prefixed to the message.
Timeline load_lab_file(const std::string& path);

}  // namespace chordeval
