#include "transdim/boxdim.hpp"

#include "transdim/errors.hpp"

#include <algorithm>
#include <cmath>

namespace transdim {
namespace {

std::uint64_t cells_per_axis(const Rational& scale) {
  if (scale <= 0 || scale > 1 || numerator(scale) != 1) {
    throw DomainError("scale must be 1/N, got " + to_string(scale));
  }
  return denominator(scale).convert_to<std::uint64_t>();
}

std::uint64_t cell_of(const Rational& x, const Rational& scale, std::uint64_t n) {
  const Rational q = x / scale;
  BigInt k = numerator(q) / denominator(q);
  return std::min<std::uint64_t>(k.convert_to<std::uint64_t>(), n - 1);
}

}  // namespace

std::uint64_t box_count(std::span<const ClosedInterval> set, const Rational& scale) {
  const std::uint64_t n = cells_per_axis(scale);
  std::uint64_t count = 0;
  std::uint64_t next_free = 0;  // cells below this index are already counted
  for (const ClosedInterval& iv : set) {
    const std::uint64_t first = std::max(cell_of(iv.lo, scale, n), next_free);
    const std::uint64_t last = cell_of(iv.hi, scale, n);
    if (last + 1 > first) {
      count += last + 1 - first;
      next_free = last + 1;
    }
  }
  return count;
}

BoxEstimate box_dimension_estimate(std::span<const ClosedInterval> set, unsigned power,
                                   std::span<const Rational> scales) {
  if (scales.size() < 3) throw DomainError("box dimension needs at least three scales");
  if (power < 1) throw DomainError("product power must be >= 1");
  for (std::size_t i = 1; i < scales.size(); ++i) {
    if (!(scales[i] < scales[i - 1])) throw DomainError("scales must be strictly decreasing");
  }
  BoxEstimate est;
  std::vector<double> xs, ys;
  for (const Rational& s : scales) {
    const std::uint64_t base = box_count(set, s);
    if (base == 0) throw DomainError("empty set has no box dimension");
    std::uint64_t c = 1;
    for (unsigned p = 0; p < power; ++p) {
      if (__builtin_mul_overflow(c, base, &c)) throw DomainError("box count overflows at this power");
    }
    est.samples.push_back({s, c});
    xs.push_back(std::log(to_double(1 / s)));
    ys.push_back(std::log(static_cast<double>(c)));
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  est.slope = sxy / sxx;
  return est;
}

}  // namespace transdim
