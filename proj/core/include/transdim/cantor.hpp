#pragma once

// Finite-depth symmetric fat Cantor sets in I = [0, 1].

#include "transdim/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace transdim {

struct ClosedInterval {
  Rational lo, hi;

  Rational length() const { return hi - lo; }
  bool contains(const Rational& t) const { return lo <= t && t <= hi; }
  friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;
};

class CantorSet {
 public:
  // Depth-d set obtained by removing, at step n = 1..d, an open middle piece
  // of absolute length schedule[n-1] from each of the 2^(n-1) intervals.
  // Throws ConstructionError when a removal is not shorter than its interval
  // or not positive.
  CantorSet(std::size_t depth, std::span<const Rational> schedule);

  std::size_t depth() const { return depth_; }
  const std::vector<ClosedInterval>& intervals() const { return intervals_; }
  const Rational& total_measure() const { return measure_; }
  const Rational& removed_measure() const { return removed_; }
  const Rational& min() const { return intervals_.front().lo; }
  const Rational& max() const { return intervals_.back().hi; }

  // Index of the interval containing t, or -1.
  std::ptrdiff_t locate(const Rational& t) const;
  bool contains(const Rational& t) const { return locate(t) >= 0; }
  // Lebesgue measure of [min, t] n C for t in C.
  Rational measure_up_to(const Rational& t) const;
  // Least t in C with measure_up_to(t) = m, for 0 <= m <= total_measure().
  Rational least_point_with_measure(const Rational& m) const;
  // Endpoints lo_0, hi_0, lo_1, ... in increasing order.
  std::vector<Rational> endpoints() const;

 private:
  std::size_t depth_;
  std::vector<ClosedInterval> intervals_;
  std::vector<Rational> prefix_;  // prefix_[i] = measure of intervals before i
  Rational measure_;
  Rational removed_;
};

// 4^-n for n = 1..depth; the limit measure is 1/2.
std::vector<Rational> default_schedule(std::size_t depth);

inline CantorSet fat_cantor(std::size_t depth) {
  auto s = default_schedule(depth);
  return CantorSet(depth, s);
}
inline CantorSet fat_cantor(std::size_t depth, std::span<const Rational> schedule) {
  return CantorSet(depth, schedule);
}

}  // namespace transdim
