#pragma once

#include "transdim/errors.hpp"
#include "transdim/rational.hpp"

#include <cstddef>
#include <span>

namespace transdim {

struct LipschitzReport {
  Rational sup_ratio;
  std::size_t pair_count = 0;
  Rational claimed_bound;
  std::size_t witness_i = 0, witness_j = 0;  // a pair attaining sup_ratio

  bool violated() const { return sup_ratio > claimed_bound; }
};

// sup over sampled pairs i < j of d_target(f_i, f_j) / d_source(x_i, x_j),
// where image[i] = f(source[i]). Pairs sharing a source point and an image
// are skipped; a shared source point with distinct images throws
// DomainError ("not a function").
template <class P, class SourceMetric, class TargetMetric>
LipschitzReport lipschitz_estimate(std::span<const P> source, std::span<const P> image, SourceMetric&& ds,
                                   TargetMetric&& dt, Rational claimed_bound) {
  if (source.size() != image.size()) throw ValidationError("source and image samples differ in length");
  if (source.size() < 2) throw DomainError("need at least two sample points");
  LipschitzReport r;
  r.claimed_bound = std::move(claimed_bound);
  for (std::size_t i = 0; i < source.size(); ++i) {
    for (std::size_t j = i + 1; j < source.size(); ++j) {
      const Rational s = ds(source[i], source[j]);
      const Rational t = dt(image[i], image[j]);
      if (s == 0) {
        if (t != 0) throw DomainError("not a function: one source point has two images");
        continue;
      }
      ++r.pair_count;
      Rational q = t / s;
      if (q > r.sup_ratio) {
        r.sup_ratio = std::move(q);
        r.witness_i = i;
        r.witness_j = j;
      }
    }
  }
  return r;
}

}  // namespace transdim
