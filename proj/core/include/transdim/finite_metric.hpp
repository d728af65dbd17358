#pragma once

// Exact checks on finite metric spaces given by a rational distance matrix.

#include "transdim/rational.hpp"
#include "transdim/smirnov.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace transdim {

struct FiniteMetricSpace {
  std::vector<std::string> labels;
  // Block of each point for balance computations; -1 marks the
  // compactification point.
  std::vector<int> block;
  std::vector<std::vector<Rational>> dist;

  std::size_t size() const { return labels.size(); }
};

// Distance matrix of a truncation. Blocks are the outermost-level block
// indices; every point is in block 0 when the shape is not a limit.
FiniteMetricSpace realize(const TruncatedSpace& s);

struct MetricViolation {
  std::string kind;  // "symmetry", "identity" or "triangle"
  std::size_t i = 0, j = 0, k = 0;
  std::string detail;
};

struct MetricReport {
  std::size_t points = 0;
  std::size_t triples = 0;
  Rational max_distance;
  std::optional<MetricViolation> violation;  // the first one in (i, j, k) order

  bool ok() const { return !violation; }
  bool bounded_by_one() const { return max_distance <= 1; }
};

inline constexpr std::size_t kDefaultPointBudget = 300;

// Symmetry, identity of indiscernibles and d(i,k) <= d(i,j) + d(j,k) for all
// triples, exactly. Throws BudgetExceeded above `budget` points.
MetricReport check_metric_axioms(const FiniteMetricSpace& m, std::size_t budget = kDefaultPointBudget);

// max over block pairs (and the compactification point against each block)
// of Dist/dist. Throws DomainError with fewer than two blocks or when a
// block pair has distance 0.
Rational balance_constant(const FiniteMetricSpace& m);

}  // namespace transdim
