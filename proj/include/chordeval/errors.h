#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chordeval {

// Malformed chord label or roman numeral text. offset() is the byte
// position of the offending character in the input string.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& message, std::size_t offset)
      : std::runtime_error(message), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Structurally bad .lab line (field count, non-numeric time). 1-based line.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& message, int line)
      : std::runtime_error(message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Segments unsorted, overlapping, or with non-positive duration.
class OrderError : public std::runtime_error {
 public:
  explicit OrderError(const std::string& message, int line = 0)
      : std::runtime_error(message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Chord shorthand with no interval template.
class UnknownQuality : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unknown (X) label where pitch content or a vocabulary mapping is required.
class UnsupportedLabel : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Key mode without a defined diatonic triad table.
class UnsupportedKey : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable or unwritable file.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chordeval
