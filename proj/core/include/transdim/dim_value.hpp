#pragma once

#include "transdim/ordinal.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace transdim {

// Element of {-1} u Ord u {Omega}, totally ordered -1 < every ordinal < Omega.
class DimValue {
 public:
  enum class Kind { NegOne, Ord, Omega };

  DimValue() : kind_(Kind::NegOne) {}
  static DimValue neg_one() { return DimValue(); }
  static DimValue omega_symbol();
  static DimValue ord(Ordinal v);
  static DimValue finite(std::uint64_t n) { return ord(Ordinal::finite(n)); }

  Kind kind() const { return kind_; }
  bool is_neg_one() const { return kind_ == Kind::NegOne; }
  bool is_ordinal() const { return kind_ == Kind::Ord; }
  bool is_omega_symbol() const { return kind_ == Kind::Omega; }
  // Throws DomainError unless kind() == Ord.
  const Ordinal& ordinal() const;

  // "-1", an ordinal literal, or "Omega".
  std::string to_string() const;
  static DimValue parse(const std::string& text);

  friend bool operator==(const DimValue& a, const DimValue& b);
  friend std::strong_ordering operator<=>(const DimValue& a, const DimValue& b);

 private:
  Kind kind_;
  Ordinal value_;
};

// Sum for bound arithmetic: Omega absorbs, -1 is the identity, and sums the
// ordinal tier refuses become Omega.
DimValue dim_add(const DimValue& a, const DimValue& b);
const DimValue& dim_max(const DimValue& a, const DimValue& b);
const DimValue& dim_min(const DimValue& a, const DimValue& b);

// Closed-below interval [lower, upper] or half-open [lower, upper).
struct Interval {
  DimValue lower;
  DimValue upper = DimValue::omega_symbol();
  bool upper_strict = false;

  static Interval exact(const DimValue& v) { return {v, v, false}; }
  static Interval vacuous() { return {}; }
  static Interval at_most(const DimValue& v, bool strict = false) { return {DimValue(), v, strict}; }

  bool is_empty() const;
  bool is_point() const { return !upper_strict && lower == upper; }
  bool contains(const DimValue& v) const;
  std::string to_string() const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Folds strict successor uppers into their non-strict predecessor,
// e.g. [0, 5) becomes [0, 4].
Interval canonical(Interval i);

// (upper, strict) as a constraint: true when a admits no more values than b.
bool upper_at_most(const DimValue& a, bool a_strict, const DimValue& b, bool b_strict);

// Intersection; std::nullopt when empty.
std::optional<Interval> meet(const Interval& a, const Interval& b);

// Bound for max{x_1..x_n} given x_i in parts[i]. parts must be nonempty.
Interval max_of(const std::vector<Interval>& parts);

struct RuleApplication {
  std::string rule;
  std::string anchor;
  std::string subject;               // canonical text of the node the rule fired on
  std::vector<Interval> inputs;      // child bounds the rule consumed
  Interval output;
  std::string note;                  // caveats, empty when none

  friend bool operator==(const RuleApplication&, const RuleApplication&) = default;
};

struct DimBound {
  DimValue lower;
  DimValue upper = DimValue::omega_symbol();
  bool upper_strict = false;
  std::vector<RuleApplication> trace;

  Interval interval() const { return {lower, upper, upper_strict}; }
  void set(const Interval& i) {
    lower = i.lower;
    upper = i.upper;
    upper_strict = i.upper_strict;
  }

  friend bool operator==(const DimBound&, const DimBound&) = default;
};

}  // namespace transdim
