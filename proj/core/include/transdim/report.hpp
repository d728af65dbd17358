#pragma once

// BoundReport: the machine- and human-readable result of evaluating one
// expression.

#include "transdim/engine.hpp"

#include <string>
#include <string_view>

namespace transdim {

struct BoundReport {
  std::string input;
  std::string normalized;
  Attributes attributes;
  Interval d;
  Interval tdhd;
  HDClass hd;
  Derivation trace;
  std::string engine_version{kEngineVersion};

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

BoundReport make_report(std::string input, const SpaceExpr& e, const Evaluation& ev);

// Sorted keys, two-space indent, trailing newline. Byte-identical for equal
// reports.
std::string to_json(const BoundReport& r);
// Throws ValidationError on malformed documents.
BoundReport report_from_json(std::string_view text);

std::string format_human(const BoundReport& r, bool with_trace);

}  // namespace transdim
