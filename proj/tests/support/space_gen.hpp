#pragma once

// Random SpaceExpr trees for property tests.

#include "transdim/ordinal_laws.hpp"
#include "transdim/space_expr.hpp"

#include <random>

namespace gen {

struct TreeOptions {
  std::size_t max_depth = 6;
  bool declarations = false;
  bool uncountable = true;  // allow w_t + d ordinals in atoms
};

class SpaceGen {
 public:
  SpaceGen(std::uint64_t seed, TreeOptions o) : rng_(seed), ords_(seed ^ 0x9e3779b97f4a7c15ULL), o_(o) {}

  transdim::SpaceRef tree() { return node(pick(1, o_.max_depth)); }

  transdim::Ordinal ordinal() {
    using transdim::Ordinal;
    const auto r = pick(0, 9);
    if (o_.uncountable && r == 0) {
      Ordinal index = pick(0, 3) == 0 ? Ordinal::omega() : Ordinal::finite(pick(1, 3));
      Ordinal tail = pick(0, 1) ? ords_.any() : Ordinal();
      return Ordinal::initial_plus(index, tail);
    }
    if (r == 1) return Ordinal::finite(pick(0, 6));
    return ords_.any();
  }

  transdim::Rational measure() {
    const long long q = static_cast<long long>(pick(2, 17));
    return transdim::Rational(static_cast<long long>(pick(1, static_cast<std::uint64_t>(q - 1))), q);
  }

  std::uint64_t pick(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
  }

 private:
  transdim::SpaceRef leaf() {
    namespace sp = transdim::space;
    switch (pick(0, 6)) {
      case 0: return sp::empty();
      case 1: return sp::point();
      case 2: return sp::cube(pick(1, 4));
      case 3: return sp::fat_cantor(measure());
      case 4: return sp::smirnov(ordinal());
      case 5: return sp::smirnov_cantor(ordinal());
      default: return sp::dense_subset(ordinal());
    }
  }

  std::vector<transdim::SpaceRef> parts(std::size_t depth) {
    std::vector<transdim::SpaceRef> out;
    const auto n = pick(1, 3);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(node(pick(1, depth)));
    return out;
  }

  transdim::SpaceRef node(std::size_t depth) {
    namespace sp = transdim::space;
    transdim::SpaceRef e;
    if (depth <= 1 || pick(0, 3) == 0) {
      e = leaf();
    } else {
      const std::size_t d = depth - 1;
      switch (pick(0, 7)) {
        case 0: e = sp::product(node(pick(1, d)), node(pick(1, d))); break;
        case 1: e = sp::closed_union(parts(d)); break;
        case 2: e = sp::locally_finite_union(parts(d), pick(0, 1) == 1); break;
        case 3: e = sp::augment(node(d)); break;
        case 4: e = sp::excision(node(pick(1, d)), node(pick(1, d))); break;
        case 5: e = sp::alexandrov_sum(parts(d), pick(0, 1) == 1); break;
        default: e = sp::subspace(node(d)); break;
      }
    }
    if (o_.declarations && pick(0, 4) == 0) e = sp::with(e, declarations());
    return e;
  }

  transdim::Declarations declarations() {
    transdim::Declarations d;
    if (pick(0, 1)) d.separable = true;
    if (pick(0, 1)) d.compact = true;
    if (pick(0, 2) == 0) d.weight = transdim::aleph(transdim::Ordinal::finite(pick(0, 2)));
    if (pick(0, 2) == 0) d.hd = transdim::Rational(static_cast<long long>(pick(0, 12)), 4);
    if (d.empty()) d.separable = true;
    return d;
  }

  std::mt19937_64 rng_;
  transdim::OrdinalSampler ords_;
  TreeOptions o_;
};

}  // namespace gen
