#include "transdim/finite_metric.hpp"

#include "transdim/errors.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace transdim {
namespace {

// Scales the matrix to a common denominator when every entry then fits
// comfortably in int64; the triangle loop is then plain integer work.
std::optional<std::vector<std::vector<std::int64_t>>> scaled(const FiniteMetricSpace& m) {
  BigInt l = 1;
  for (const auto& row : m.dist) {
    for (const Rational& d : row) l = boost::multiprecision::lcm(l, BigInt(denominator(d)));
  }
  const BigInt limit = BigInt(std::numeric_limits<std::int64_t>::max() / 4);
  std::vector<std::vector<std::int64_t>> out(m.size(), std::vector<std::int64_t>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      const Rational& d = m.dist[i][j];
      BigInt v = numerator(d) * (l / denominator(d));
      if (v > limit || v < -limit) return std::nullopt;
      out[i][j] = v.convert_to<std::int64_t>();
    }
  }
  return out;
}

template <class M>
std::optional<MetricViolation> triangle(const M& d, std::size_t n, const FiniteMetricSpace& m) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (d[i][k] > d[i][j] + d[j][k]) {
          return MetricViolation{"triangle", i, j, k,
                                 "d(" + m.labels[i] + ", " + m.labels[k] + ") = " + to_string(m.dist[i][k]) +
                                     " > " + to_string(m.dist[i][j]) + " + " + to_string(m.dist[j][k])};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

FiniteMetricSpace realize(const TruncatedSpace& s) {
  FiniteMetricSpace m;
  const auto& pts = s.points();
  const std::size_t n = pts.size();
  std::map<std::string, int> block_index;
  for (std::size_t k = 0; k < s.blocks().size(); ++k) block_index.emplace(s.blocks()[k].to_string(), static_cast<int>(k));
  for (const SmirnovPoint& p : pts) {
    m.labels.push_back(p.to_string());
    int b = 0;
    if (s.is_limit_level()) {
      const AddressStep& top = p.path.front();
      b = top.kind == AddressStep::Kind::Omega ? -1 : block_index.at(top.block.to_string());
    }
    m.block.push_back(b);
  }
  m.dist.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      m.dist[i][j] = smirnov_dist(s, pts[i], pts[j]);
      m.dist[j][i] = m.dist[i][j];
    }
  }
  return m;
}

MetricReport check_metric_axioms(const FiniteMetricSpace& m, std::size_t budget) {
  const std::size_t n = m.size();
  if (n > budget) throw BudgetExceeded(n, budget);
  if (m.dist.size() != n || m.block.size() != n) throw ValidationError("distance matrix shape does not match labels");
  for (const auto& row : m.dist) {
    if (row.size() != n) throw ValidationError("distance matrix is not square");
  }
  MetricReport r;
  r.points = n;
  r.triples = n * n * n;
  for (std::size_t i = 0; i < n && !r.violation; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& d = m.dist[i][j];
      r.max_distance = std::max(r.max_distance, d);
      if (d != m.dist[j][i]) {
        r.violation = MetricViolation{"symmetry", i, j, j, "d(i,j) != d(j,i)"};
        break;
      }
      if ((i == j) != (d == 0) || d < 0) {
        r.violation = MetricViolation{"identity", i, j, j,
                                      "d(" + m.labels[i] + ", " + m.labels[j] + ") = " + to_string(d)};
        break;
      }
    }
  }
  if (r.violation) return r;
  if (auto ints = scaled(m)) {
    r.violation = triangle(*ints, n, m);
  } else {
    r.violation = triangle(m.dist, n, m);
  }
  return r;
}

Rational balance_constant(const FiniteMetricSpace& m) {
  std::map<int, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < m.size(); ++i) members[m.block[i]].push_back(i);
  std::size_t proper = 0;
  for (const auto& [b, idx] : members) proper += b >= 0 ? 1 : 0;
  if (proper < 2) throw DomainError("balance constant needs a limit level with at least two blocks");

  Rational best = 0;
  for (auto a = members.begin(); a != members.end(); ++a) {
    for (auto b = std::next(a); b != members.end(); ++b) {
      Rational lo, hi;
      bool first = true;
      for (std::size_t i : a->second) {
        for (std::size_t j : b->second) {
          const Rational& d = m.dist[i][j];
          if (first || d < lo) lo = d;
          if (first || d > hi) hi = d;
          first = false;
        }
      }
      if (lo == 0) throw DomainError("blocks " + std::to_string(a->first) + " and " + std::to_string(b->first) +
                                     " are at distance 0");
      best = std::max(best, Rational(hi / lo));
    }
  }
  return best;
}

}  // namespace transdim
