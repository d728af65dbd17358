#pragma once

// Box-counting dimension estimates for finite unions of closed intervals in
// I and their Cartesian powers.

#include "transdim/cantor.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace transdim {

// Number of grid cells [k s, (k+1) s), k = 0..N-1 (the last one closed),
// meeting the union; s must be 1/N. Intervals must be sorted and disjoint.
std::uint64_t box_count(std::span<const ClosedInterval> set, const Rational& scale);

struct BoxSample {
  Rational scale;
  std::uint64_t count = 0;
};

struct BoxEstimate {
  double slope = 0;  // least-squares slope of log(count) against log(1/scale)
  std::vector<BoxSample> samples;
};

// For the power-th Cartesian power the count at each scale is count^power.
// Needs at least three strictly decreasing scales of the form 1/N; throws
// DomainError otherwise.
BoxEstimate box_dimension_estimate(std::span<const ClosedInterval> set, unsigned power,
                                   std::span<const Rational> scales);

}  // namespace transdim
