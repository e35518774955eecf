#pragma once

#include <optional>
#include <string>

#include "chordeval/evaluation.h"

namespace chordeval {

// Scores print with six fractional digits; undefined scores render as
// null (JSON), an empty field (CSV), or n/a (text). Output is
// byte-deterministic for a given report.
std::string format_score(double value);                       // "0.666667"
std::string format_score(const std::optional<double>& value); // or "null"

std::string render_json(const CorpusReport& report, const EvalOptions& options);
std::string render_csv(const CorpusReport& report, const EvalOptions& options);
std::string render_text(const CorpusReport& report, const EvalOptions& options);

}  // namespace chordeval
