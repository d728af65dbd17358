#include "transdim/space_expr.hpp"

#include "transdim/errors.hpp"

#include <algorithm>
#include <type_traits>

namespace transdim {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

SpaceRef make(SpaceNode n) { return std::make_shared<const SpaceExpr>(std::move(n), Declarations{}); }

void require_children(const std::vector<SpaceRef>& parts, std::string_view what) {
  if (parts.empty()) throw ValidationError(std::string(what) + " needs at least one part");
  for (const SpaceRef& p : parts) {
    if (!p) throw ValidationError(std::string(what) + " has a null part");
  }
}

bool equal_lists(const std::vector<SpaceRef>& a, const std::vector<SpaceRef>& b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](const SpaceRef& x, const SpaceRef& y) { return equal(*x, *y); });
}

}  // namespace

std::vector<SpaceRef> SpaceExpr::children() const {
  return std::visit(overloaded{
                        [](const node::Product& p) -> std::vector<SpaceRef> { return {p.left, p.right}; },
                        [](const node::ClosedUnion& u) { return u.parts; },
                        [](const node::LocallyFiniteUnion& u) { return u.parts; },
                        [](const node::AlexandrovSum& u) { return u.parts; },
                        [](const node::Augment& a) -> std::vector<SpaceRef> { return {a.core}; },
                        [](const node::Excision& x) -> std::vector<SpaceRef> { return {x.complement, x.closed}; },
                        [](const node::Subspace& s) -> std::vector<SpaceRef> { return {s.parent}; },
                        [](const auto&) { return std::vector<SpaceRef>{}; },
                    },
                    node_);
}

std::string_view SpaceExpr::kind_name() const {
  static constexpr std::string_view names[] = {
      "Empty",   "Point",       "Cube",    "FatCantor", "Smirnov",       "SmirnovCantor", "DenseSubset",
      "Product", "ClosedUnion", "LocallyFiniteClosedUnion", "Augment", "Excision", "AlexandrovSum", "SubspaceOf"};
  return names[node_.index()];
}

bool equal(const SpaceExpr& a, const SpaceExpr& b) {
  if (a.node().index() != b.node().index()) return false;
  if (!(a.declared() == b.declared())) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.node());
        if constexpr (std::is_same_v<T, node::Cube>) {
          return x.n == y.n;
        } else if constexpr (std::is_same_v<T, node::FatCantor>) {
          return x.measure == y.measure;
        } else if constexpr (std::is_same_v<T, node::Smirnov> || std::is_same_v<T, node::SmirnovCantor> ||
                             std::is_same_v<T, node::DenseSubset>) {
          return x.alpha == y.alpha;
        } else if constexpr (std::is_same_v<T, node::Product>) {
          return equal(*x.left, *y.left) && equal(*x.right, *y.right);
        } else if constexpr (std::is_same_v<T, node::ClosedUnion>) {
          return equal_lists(x.parts, y.parts);
        } else if constexpr (std::is_same_v<T, node::LocallyFiniteUnion> ||
                             std::is_same_v<T, node::AlexandrovSum>) {
          return x.repeats == y.repeats && equal_lists(x.parts, y.parts);
        } else if constexpr (std::is_same_v<T, node::Augment>) {
          return equal(*x.core, *y.core);
        } else if constexpr (std::is_same_v<T, node::Excision>) {
          return equal(*x.complement, *y.complement) && equal(*x.closed, *y.closed);
        } else if constexpr (std::is_same_v<T, node::Subspace>) {
          return equal(*x.parent, *y.parent);
        } else {
          return true;
        }
      },
      a.node());
}

std::size_t depth(const SpaceExpr& e) {
  std::size_t d = 0;
  for (const SpaceRef& c : e.children()) d = std::max(d, depth(*c));
  return d + 1;
}

namespace space {

SpaceRef empty() { return make(node::Empty{}); }
SpaceRef point() { return make(node::Point{}); }
SpaceRef cube(std::uint64_t n) { return make(node::Cube{n}); }

SpaceRef fat_cantor(const Rational& measure) {
  if (measure <= 0 || measure >= 1) {
    throw ValidationError("fat Cantor measure must lie strictly between 0 and 1, got " + to_string(measure));
  }
  return make(node::FatCantor{measure});
}

SpaceRef smirnov(const Ordinal& alpha) { return make(node::Smirnov{alpha}); }
SpaceRef smirnov_cantor(const Ordinal& alpha) { return make(node::SmirnovCantor{alpha}); }
SpaceRef dense_subset(const Ordinal& alpha) { return make(node::DenseSubset{alpha}); }

SpaceRef product(SpaceRef left, SpaceRef right) {
  if (!left || !right) throw ValidationError("product has a null factor");
  return make(node::Product{std::move(left), std::move(right)});
}

SpaceRef closed_union(std::vector<SpaceRef> parts) {
  require_children(parts, "cunion");
  return make(node::ClosedUnion{std::move(parts)});
}

SpaceRef locally_finite_union(std::vector<SpaceRef> parts, bool repeats) {
  require_children(parts, "lfunion");
  return make(node::LocallyFiniteUnion{std::move(parts), repeats});
}

SpaceRef augment(SpaceRef core) {
  if (!core) throw ValidationError("aug has a null core");
  return make(node::Augment{std::move(core)});
}

SpaceRef excision(SpaceRef complement, SpaceRef closed) {
  if (!complement || !closed) throw ValidationError("excise has a null part");
  return make(node::Excision{std::move(complement), std::move(closed)});
}

SpaceRef alexandrov_sum(std::vector<SpaceRef> parts, bool repeats) {
  require_children(parts, "alex");
  return make(node::AlexandrovSum{std::move(parts), repeats});
}

SpaceRef subspace(SpaceRef parent) {
  if (!parent) throw ValidationError("sub has a null parent");
  return make(node::Subspace{std::move(parent)});
}

SpaceRef with(const SpaceRef& e, const Declarations& extra) {
  Declarations d = e->declared();
  auto merge = [](auto& slot, const auto& value, const char* name) {
    if (!value) return;
    if (slot) throw ValidationError(std::string("attribute '") + name + "' declared twice");
    slot = value;
  };
  merge(d.hd, extra.hd, "hd");
  merge(d.separable, extra.separable, "separable");
  merge(d.compact, extra.compact, "compact");
  merge(d.weight, extra.weight, "weight");
  if (d.hd && *d.hd < 0) throw ValidationError("declared Hausdorff dimension must be >= 0");
  return std::make_shared<const SpaceExpr>(e->node(), std::move(d));
}

}  // namespace space
}  // namespace transdim
