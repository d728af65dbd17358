#pragma once

// Finite truncations of Smirnov spaces S_alpha with their exact metric.
//
// A point is an address read from the outermost level inwards: a successor
// level alpha = beta + 1 contributes an interval coordinate t, a limit level
// contributes either the compactification point or the index of the block
// S_beta the point lies in. S_0 is a single point with the empty address.

#include "transdim/ordinal.hpp"
#include "transdim/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace transdim {

struct AddressStep {
  enum class Kind { Coord, Block, Omega };
  Kind kind = Kind::Coord;
  Rational t;     // Coord
  Ordinal block;  // Block

  static AddressStep coord(Rational t) { return {Kind::Coord, std::move(t), {}}; }
  static AddressStep in_block(Ordinal b) { return {Kind::Block, 0, std::move(b)}; }
  static AddressStep omega() { return {Kind::Omega, 0, {}}; }

  friend bool operator==(const AddressStep&, const AddressStep&) = default;
};

struct SmirnovPoint {
  std::vector<AddressStep> path;

  std::string to_string() const;
  friend bool operator==(const SmirnovPoint&, const SmirnovPoint&) = default;
};

enum class MetricVariant {
  // Limit levels use min{1, formula}, which keeps every distance <= 1.
  BoundedByOne,
  // The three-case formula as written; cross-block distances can reach 3/2.
  Verbatim,
};

struct TruncationOptions {
  std::size_t blocks = 6;          // realized blocks per limit level
  Rational grid{1, 8};             // interval coordinates are multiples of grid
  std::size_t block_cap = 48;      // blocks with more lattice points are stride-sampled
  MetricVariant variant = MetricVariant::BoundedByOne;
};

class TruncatedSpace {
 public:
  const Ordinal& shape() const { return shape_; }
  const TruncationOptions& options() const { return options_; }
  const std::vector<SmirnovPoint>& points() const { return points_; }
  // Realized blocks of the outermost level; empty unless shape() is a limit.
  const std::vector<Ordinal>& blocks() const { return blocks_; }
  bool is_limit_level() const { return shape_.is_limit(); }

 private:
  friend TruncatedSpace truncate_smirnov(const Ordinal&, TruncationOptions);
  Ordinal shape_;
  TruncationOptions options_;
  std::vector<SmirnovPoint> points_;
  std::vector<Ordinal> blocks_;
};

// Supports Small alpha below w^w. Throws DomainError for alpha >= w_1 and
// ValidationError for unsupported shapes or a grid that is not 1/N.
// Throws BudgetExceeded past kMaxTruncationPoints points.
inline constexpr std::size_t kMaxTruncationPoints = 1'000'000;
TruncatedSpace truncate_smirnov(const Ordinal& alpha, TruncationOptions options = {});

// The m realized blocks of a limit level alpha = gamma + w^e:
// gamma + w^(e-1)*k for k = 0..m-1.
std::vector<Ordinal> realized_blocks(const Ordinal& alpha, std::size_t m);

Ordinal predecessor(const Ordinal& successor_ordinal);

// rho_alpha(p, q). Throws DomainError when an address does not fit alpha.
Rational smirnov_dist(const Ordinal& alpha, const SmirnovPoint& p, const SmirnovPoint& q,
                      MetricVariant variant = MetricVariant::BoundedByOne);
inline Rational smirnov_dist(const TruncatedSpace& s, const SmirnovPoint& p, const SmirnovPoint& q) {
  return smirnov_dist(s.shape(), p, q, s.options().variant);
}

}  // namespace transdim
