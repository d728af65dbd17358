#include "transdim/smirnov.hpp"

#include "transdim/errors.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace transdim {
namespace {

__extension__ typedef unsigned __int128 u128;

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  return __builtin_mul_overflow(a, b, &out) ? kSaturated : out;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  return __builtin_add_overflow(a, b, &out) ? kSaturated : out;
}

bool finite_exponents(const Ordinal& a) {
  return std::all_of(a.terms().begin(), a.terms().end(), [](const CnfTerm& t) { return t.exponent.is_finite(); });
}

// Lattice sizes and index-to-address decoding for one truncation.
class Lattice {
 public:
  Lattice(const TruncationOptions& o, std::uint64_t per_axis) : o_(o), axis_(per_axis) {}

  std::uint64_t count(const Ordinal& a) {
    const std::string key = a.to_string();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::uint64_t n = 1;
    if (a.is_zero()) {
      n = 1;
    } else if (a.is_successor()) {
      n = sat_mul(count(predecessor(a)), axis_);
    } else {
      n = 1;
      for (const Ordinal& b : blocks(a)) n = sat_add(n, std::min<std::uint64_t>(o_.block_cap, count(b)));
    }
    memo_.emplace(key, n);
    return n;
  }

  void decode(const Ordinal& a, std::uint64_t idx, std::vector<AddressStep>& out) {
    if (a.is_zero()) return;
    if (a.is_successor()) {
      out.push_back(AddressStep::coord(o_.grid * static_cast<long long>(idx % axis_)));
      decode(predecessor(a), idx / axis_, out);
      return;
    }
    if (idx == 0) {
      out.push_back(AddressStep::omega());
      return;
    }
    --idx;
    for (const Ordinal& b : blocks(a)) {
      const std::uint64_t total = count(b);
      const std::uint64_t kept = std::min<std::uint64_t>(o_.block_cap, total);
      if (idx < kept) {
        if (total == kSaturated) throw BudgetExceeded(kMaxTruncationPoints, kMaxTruncationPoints);
        out.push_back(AddressStep::in_block(b));
        decode(b, stride(idx, total, kept), out);
        return;
      }
      idx -= kept;
    }
    throw DomainError("lattice index out of range");
  }

 private:
  const std::vector<Ordinal>& blocks(const Ordinal& a) {
    const std::string key = a.to_string();
    auto it = blocks_.find(key);
    if (it == blocks_.end()) it = blocks_.emplace(key, realized_blocks(a, o_.blocks)).first;
    return it->second;
  }

  // Evenly spaced picks from [0, total) that keep both ends.
  static std::uint64_t stride(std::uint64_t s, std::uint64_t total, std::uint64_t kept) {
    if (kept == total) return s;
    if (kept == 1) return 0;
    return static_cast<std::uint64_t>(static_cast<u128>(s) * (total - 1) / (kept - 1));
  }

  const TruncationOptions& o_;
  std::uint64_t axis_;
  std::map<std::string, std::uint64_t> memo_;
  std::map<std::string, std::vector<Ordinal>> blocks_;
};

Rational block_weight(const Ordinal& beta) { return Rational(1, static_cast<long long>(decompose(beta).finite_part + 1)); }

Rational rho(const Ordinal& alpha, const std::vector<AddressStep>& a, const std::vector<AddressStep>& b,
             std::size_t i, MetricVariant variant) {
  auto mismatch = [&] { throw DomainError("address does not fit S_" + alpha.to_string()); };
  if (alpha.is_zero()) {
    if (i != a.size() || i != b.size()) mismatch();
    return 0;
  }
  if (i >= a.size() || i >= b.size()) mismatch();
  const AddressStep& x = a[i];
  const AddressStep& y = b[i];
  if (alpha.is_successor()) {
    if (x.kind != AddressStep::Kind::Coord || y.kind != AddressStep::Kind::Coord) mismatch();
    Rational dt = x.t - y.t;
    if (dt < 0) dt = -dt;
    return (rho(predecessor(alpha), a, b, i + 1, variant) + dt) / 2;
  }
  auto check_step = [&](const AddressStep& s, const std::vector<AddressStep>& path) {
    if (s.kind == AddressStep::Kind::Coord) mismatch();
    if (s.kind == AddressStep::Kind::Omega && i + 1 != path.size()) mismatch();
    if (s.kind == AddressStep::Kind::Block && !(s.block < alpha)) mismatch();
  };
  check_step(x, a);
  check_step(y, b);
  const bool xo = x.kind == AddressStep::Kind::Omega;
  const bool yo = y.kind == AddressStep::Kind::Omega;
  Rational d;
  if (xo && yo) {
    d = 0;
  } else if (xo) {
    d = block_weight(y.block);
  } else if (yo) {
    d = block_weight(x.block);
  } else if (x.block == y.block) {
    d = rho(x.block, a, b, i + 1, variant) * block_weight(x.block);
  } else {
    d = block_weight(x.block) + block_weight(y.block);
  }
  if (variant == MetricVariant::BoundedByOne && d > 1) d = 1;
  return d;
}

}  // namespace

std::string SmirnovPoint::to_string() const {
  if (path.empty()) return "*";
  std::string out;
  for (const AddressStep& s : path) {
    if (!out.empty()) out += ' ';
    switch (s.kind) {
      case AddressStep::Kind::Coord:
        out += "t=" + transdim::to_string(s.t);
        break;
      case AddressStep::Kind::Block:
        out += "[" + s.block.to_string() + "]";
        break;
      case AddressStep::Kind::Omega:
        out += "omega";
        break;
    }
  }
  return out;
}

Ordinal predecessor(const Ordinal& a) {
  Decomposition d = decompose(a);
  if (d.finite_part == 0) throw DomainError(a.to_string() + " has no predecessor");
  return add(d.limit_part, Ordinal::finite(d.finite_part - 1));
}

std::vector<Ordinal> realized_blocks(const Ordinal& alpha, std::size_t m) {
  if (!alpha.is_small() || !alpha.is_limit()) throw DomainError(alpha.to_string() + " is not a countable limit");
  const CnfTerm& last = alpha.terms().back();
  auto e = last.exponent.as_finite();
  if (!e) throw ValidationError("truncation needs alpha below w^w, got " + alpha.to_string());
  std::vector<CnfTerm> head(alpha.terms().begin(), alpha.terms().end() - 1);
  if (last.coefficient > 1) head.push_back({last.exponent, last.coefficient - 1});
  const Ordinal gamma = normalize_terms(std::move(head));
  std::vector<Ordinal> out;
  out.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    Ordinal step = k == 0 ? Ordinal() : Ordinal::omega_power(Ordinal::finite(*e - 1), k);
    out.push_back(add(gamma, step));
  }
  return out;
}

TruncatedSpace truncate_smirnov(const Ordinal& alpha, TruncationOptions options) {
  if (!alpha.is_small()) {
    throw DomainError("S_" + alpha.to_string() + " is an uncountable discrete union and is not realized");
  }
  if (!finite_exponents(alpha)) throw ValidationError("truncation needs alpha below w^w, got " + alpha.to_string());
  if (options.grid <= 0 || options.grid > 1 || numerator(options.grid) != 1) {
    throw ValidationError("grid step must be 1/N, got " + to_string(options.grid));
  }
  if (alpha.is_limit() && options.blocks < 1) throw ValidationError("a limit level needs at least one block");
  if (options.block_cap < 1) throw ValidationError("block cap must be >= 1");
  const std::uint64_t per_axis = denominator(options.grid).convert_to<std::uint64_t>() + 1;

  TruncatedSpace s;
  s.shape_ = alpha;
  s.options_ = options;
  if (alpha.is_limit()) s.blocks_ = realized_blocks(alpha, options.blocks);
  Lattice lattice(s.options_, per_axis);
  const std::uint64_t n = lattice.count(alpha);
  if (n > kMaxTruncationPoints) throw BudgetExceeded(n == kSaturated ? kMaxTruncationPoints : n, kMaxTruncationPoints);
  s.points_.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    SmirnovPoint p;
    lattice.decode(alpha, i, p.path);
    s.points_.push_back(std::move(p));
  }
  return s;
}

Rational smirnov_dist(const Ordinal& alpha, const SmirnovPoint& p, const SmirnovPoint& q, MetricVariant variant) {
  return rho(alpha, p.path, q.path, 0, variant);
}

}  // namespace transdim
