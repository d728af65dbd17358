#include "transdim/cantor.hpp"

#include "transdim/errors.hpp"

#include <algorithm>

namespace transdim {

CantorSet::CantorSet(std::size_t depth, std::span<const Rational> schedule) : depth_(depth) {
  if (schedule.size() < depth) {
    throw ConstructionError("removal schedule has " + std::to_string(schedule.size()) + " entries, depth " +
                            std::to_string(depth));
  }
  intervals_.push_back({Rational(0), Rational(1)});
  for (std::size_t step = 0; step < depth; ++step) {
    const Rational& r = schedule[step];
    std::vector<ClosedInterval> next;
    next.reserve(intervals_.size() * 2);
    for (const ClosedInterval& iv : intervals_) {
      if (r <= 0 || r >= iv.length()) {
        throw ConstructionError("step " + std::to_string(step + 1) + " removes " + to_string(r) +
                                " from an interval of length " + to_string(iv.length()));
      }
      const Rational piece = (iv.length() - r) / 2;
      next.push_back({iv.lo, iv.lo + piece});
      next.push_back({iv.hi - piece, iv.hi});
      removed_ += r;
    }
    intervals_ = std::move(next);
  }
  prefix_.reserve(intervals_.size());
  for (const ClosedInterval& iv : intervals_) {
    prefix_.push_back(measure_);
    measure_ += iv.length();
  }
}

std::ptrdiff_t CantorSet::locate(const Rational& t) const {
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), t,
                             [](const Rational& x, const ClosedInterval& iv) { return x < iv.lo; });
  if (it == intervals_.begin()) return -1;
  --it;
  return it->contains(t) ? it - intervals_.begin() : -1;
}

Rational CantorSet::measure_up_to(const Rational& t) const {
  const std::ptrdiff_t i = locate(t);
  if (i < 0) throw DomainError(to_string(t) + " is not in the Cantor set");
  const auto k = static_cast<std::size_t>(i);
  return prefix_[k] + (t - intervals_[k].lo);
}

Rational CantorSet::least_point_with_measure(const Rational& m) const {
  if (m < 0 || m > measure_) throw DomainError("measure " + to_string(m) + " outside [0, " + to_string(measure_) + "]");
  for (std::size_t k = 0; k < intervals_.size(); ++k) {
    if (prefix_[k] + intervals_[k].length() >= m) return intervals_[k].lo + (m - prefix_[k]);
  }
  return max();
}

std::vector<Rational> CantorSet::endpoints() const {
  std::vector<Rational> out;
  out.reserve(intervals_.size() * 2);
  for (const ClosedInterval& iv : intervals_) {
    out.push_back(iv.lo);
    out.push_back(iv.hi);
  }
  return out;
}

std::vector<Rational> default_schedule(std::size_t depth) {
  std::vector<Rational> s;
  Rational r(1, 4);
  for (std::size_t n = 0; n < depth; ++n) {
    s.push_back(r);
    r /= 4;
  }
  return s;
}

}  // namespace transdim
