#pragma once

// Expression trees of metric-space constructions.
//
// Trees are immutable and shared: children are held by shared_ptr<const>,
// so copies are cheap and subtrees may be evaluated from any thread.

#include "transdim/ordinal.hpp"
#include "transdim/rational.hpp"

#include <memory>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace transdim {

class SpaceExpr;
using SpaceRef = std::shared_ptr<const SpaceExpr>;

// User-supplied facts attached with `with {...}`.
struct Declarations {
  std::optional<Rational> hd;
  std::optional<bool> separable;
  std::optional<bool> compact;
  std::optional<Aleph> weight;  // the space has a base of cardinality <= weight

  bool empty() const { return !hd && !separable && !compact && !weight; }
  friend bool operator==(const Declarations&, const Declarations&) = default;
};

namespace node {

struct Empty {};
struct Point {};
struct Cube {  // I^n
  std::uint64_t n = 1;
};
struct FatCantor {  // Cantor set in I of the given Lebesgue measure
  Rational measure;
};
struct Smirnov {  // S_alpha
  Ordinal alpha;
};
struct SmirnovCantor {  // C_alpha
  Ordinal alpha;
};
struct DenseSubset {  // D_alpha
  Ordinal alpha;
};
struct Product {
  SpaceRef left, right;
};
struct ClosedUnion {  // finitely many closed parts
  std::vector<SpaceRef> parts;
};
struct LocallyFiniteUnion {  // repeats: the prototype list recurs countably
  std::vector<SpaceRef> parts;
  bool repeats = false;
};
struct Augment {  // core with a nonempty countable set adjoined
  SpaceRef core;
};
struct Excision {  // X given as the pair (X \ F, F) with F closed in X
  SpaceRef complement;
  SpaceRef closed;
};
struct AlexandrovSum {  // metric one-point compactification of the disjoint sum
  std::vector<SpaceRef> parts;
  bool repeats = false;
};
struct Subspace {  // an arbitrary, possibly empty, subspace
  SpaceRef parent;
};

}  // namespace node

using SpaceNode = std::variant<node::Empty, node::Point, node::Cube, node::FatCantor, node::Smirnov,
                               node::SmirnovCantor, node::DenseSubset, node::Product, node::ClosedUnion,
                               node::LocallyFiniteUnion, node::Augment, node::Excision,
                               node::AlexandrovSum, node::Subspace>;

class SpaceExpr {
 public:
  SpaceExpr(SpaceNode node, Declarations declared) : node_(std::move(node)), declared_(std::move(declared)) {}

  const SpaceNode& node() const { return node_; }
  const Declarations& declared() const { return declared_; }

  template <class T>
  const T* as() const {
    return std::get_if<T>(&node_);
  }

  // Child expressions in left-to-right order.
  std::vector<SpaceRef> children() const;

  std::string_view kind_name() const;

 private:
  SpaceNode node_;
  Declarations declared_;
};

// Deep structural equality, declarations included.
bool equal(const SpaceExpr& a, const SpaceExpr& b);
inline bool equal(const SpaceRef& a, const SpaceRef& b) { return equal(*a, *b); }

std::size_t depth(const SpaceExpr& e);

// Validating constructors; they throw ValidationError on malformed arguments.
namespace space {

SpaceRef empty();
SpaceRef point();
SpaceRef cube(std::uint64_t n);
SpaceRef fat_cantor(const Rational& measure);
SpaceRef smirnov(const Ordinal& alpha);
SpaceRef smirnov_cantor(const Ordinal& alpha);
SpaceRef dense_subset(const Ordinal& alpha);
SpaceRef product(SpaceRef left, SpaceRef right);
SpaceRef closed_union(std::vector<SpaceRef> parts);
SpaceRef locally_finite_union(std::vector<SpaceRef> parts, bool repeats);
SpaceRef augment(SpaceRef core);
SpaceRef excision(SpaceRef complement, SpaceRef closed);
SpaceRef alexandrov_sum(std::vector<SpaceRef> parts, bool repeats);
SpaceRef subspace(SpaceRef parent);

// Same node with `extra` merged into its declarations. Throws
// ValidationError when a field is declared twice.
SpaceRef with(const SpaceRef& e, const Declarations& extra);

}  // namespace space

}  // namespace transdim
