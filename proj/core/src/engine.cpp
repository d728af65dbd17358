#include "transdim/engine.hpp"

#include "transdim/dsl.hpp"
#include "transdim/errors.hpp"

#include <algorithm>
#include <sstream>

namespace transdim {
namespace {

constexpr RuleInfo kRules[] = {
    // D-dimension
    {"EmptyDef", "D(empty) = -1", RuleKind::Atom},
    {"PointZero", "a nonempty finite space is its own D-representation with Ind = 0", RuleKind::Atom},
    {"CubeExact", "D(I^n) = Ind(I^n) = n", RuleKind::Atom},
    {"CantorZeroDim", "Cantor sets are zero-dimensional: Ind(C) = D(C) = 0", RuleKind::Atom},
    {"SmirnovExact", "D(S_a) = a for every Smirnov space (Henderson)", RuleKind::Atom},
    {"CantorAlphaZeroDim", "D(C_a) = 0 for a < w_1, by transfinite induction with the excision and locally finite sum theorems",
     RuleKind::Atom},
    {"CantorAlphaZeroDimLarge", "D(C_a) = 0 for a >= w_1, from the construction X_a = C_a with D(X_a) = 0",
     RuleKind::Atom},
    {"DenseCountable", "D_a is countable for a < w_1; X = X_* u X_0 with X_* a point gives D = 0", RuleKind::Atom},
    {"DenseSubspaceUpper", "D_a is a nonempty subspace of S_a, so 0 <= D(D_a) <= D(S_a) = a", RuleKind::Atom},
    {"ProductEmpty", "a product with an empty factor is empty", RuleKind::Equality},
    {"ProductCellIdentity", "S_b x I^n = S_(b+n), the successor step of the Smirnov sequence", RuleKind::Equality},
    {"ProductCantorIdentity", "C_b x C^n = C_(b+n), the successor step of the Cantor sequence", RuleKind::Equality},
    {"ProductDenseIdentity", "D_b x D_1^n = D_(b+n), the successor step of the dense sequence", RuleKind::Equality},
    {"ProductSubspaceLower", "each factor embeds as a closed subspace of a nonempty product", RuleKind::Max},
    {"ClosedUnionMax", "X = A u B with A, B closed: D(X) = max{D(A), D(B)}", RuleKind::Max},
    {"LocallyFiniteSum", "a locally finite union of closed sets with D <= b has D <= b", RuleKind::Max},
    {"CountableAugmentD", "X = X_* u X_0, X_* closed nonempty, X_0 countable: D(X) = D(X_*)", RuleKind::Equality},
    {"ExcisionBound", "F closed in X: D(X) <= lambda(D(X\\F)) + max{n(D(X\\F)), D(F)} <= D(X\\F) + D(F)",
     RuleKind::Sum},
    {"AlexandrovSumBound",
     "excision of the compactification point, with the locally finite sum theorem on the disjoint blocks",
     RuleKind::Sum},
    {"SubspaceMonotone", "D(E) <= D(X) for a subspace E of X", RuleKind::Cap},
    // tDHD
    {"EmptyTdhd", "tDHD(X) = -1 iff X is empty", RuleKind::Atom},
    {"TdhdDominatesD", "tDHD(X) = sup{D(Im f) : f Lipschitz on a subspace of X} >= D(X)", RuleKind::Cap},
    {"PointTdhd", "every Lipschitz image of a subspace of a point has D <= 0", RuleKind::Atom},
    {"FatCantorSurjection", "phi(t) = Leb(C)^-1 Leb([min C, t] n C) maps C Lipschitz onto I, so tDHD(C) >= 1",
     RuleKind::Atom},
    {"SmirnovTdhdCountable", "tDHD(S_a) < w_1 for a < w_1", RuleKind::Atom},
    {"SmirnovCantorTdhd", "D(S_a) <= tDHD(C_a) < w_1 for a < w_1", RuleKind::Atom},
    {"CantorAlphaLarge", "a <= tDHD(C_a) <= w_t with t least such that a < w_t", RuleKind::Atom},
    {"DenseCountableTdhd", "countable X = X_* u X_0 with X_* a point: tDHD(X) = tDHD(X_*) = 0", RuleKind::Atom},
    {"ProductSubspaceTdhd", "each factor embeds isometrically in a nonempty product, and tDHD is monotone on subspaces",
     RuleKind::Max},
    {"CompactClosedUnionMax", "compact X = X_1 u ... u X_n with closed parts: tDHD(X) = max tDHD(X_i)",
     RuleKind::Max},
    {"CompactLocallyFiniteSup", "compact X with a locally finite closed cover: tDHD(X) = sup tDHD(X_j)",
     RuleKind::Max},
    {"TdhdSubspaceMonotone", "tDHD(E) <= tDHD(X) for every subspace E of X", RuleKind::Max},
    {"CountableAugmentEq", "X_* closed nonempty, X_0 countable: tDHD(X_* u X_0) = tDHD(X_*)", RuleKind::Equality},
    {"AlexandrovLocalSum",
     "compact X = X_0 u U X_j, X_0 closed, X_j closed and locally finite off X_0: tDHD(X) <= tDHD(X_0) + "
     "tDHD(U X_j)",
     RuleKind::Sum},
    // Hausdorff-dimension facts
    {"CubeHausdorff", "HD(I^n) = n", RuleKind::Atom},
    {"SmirnovFiniteCell", "S_n is the cell I^n for finite n, so HD(S_n) = n", RuleKind::Atom},
    {"FatCantorFullHD", "a subset of I with positive Lebesgue measure has HD = 1", RuleKind::Atom},
    {"CountableZeroHD", "countable sets have HD = 0", RuleKind::Atom},
    {"HDCountableStability", "HD of a countable union is the sup of the parts; subspaces have smaller HD",
     RuleKind::Max},
    // caps
    {"HDFloorCap", "HD(X) finite: D(X) <= tDHD(X) <= floor(HD(X))", RuleKind::Cap},
    {"WeightCap", "X has a base of cardinality <= aleph_a and D(X) < Omega: tDHD(X) <= w_(a+1)", RuleKind::Cap},
};

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

struct HdFact {
  HDClass cls;        // Unknown, FiniteExactly or FiniteAtMost
  std::string source; // rule that established it
};

struct NodeResult {
  Attributes attrs;
  HdFact hd;
  Interval d;
  Interval t;
  std::vector<RuleApplication> d_trace;
  std::vector<RuleApplication> t_trace;
  bool declared = false;  // this node or a descendant carries declarations
};

Tri all_of(const std::vector<Tri>& v) {
  bool unknown = false;
  for (Tri t : v) {
    if (t == Tri::False) return Tri::False;
    if (t == Tri::Unknown) unknown = true;
  }
  return unknown ? Tri::Unknown : Tri::True;
}

std::optional<Aleph> max_weight(const std::vector<const NodeResult*>& kids) {
  std::optional<Aleph> w;
  for (const NodeResult* k : kids) {
    if (!k->attrs.weight) return std::nullopt;
    if (!w || *w < *k->attrs.weight) w = k->attrs.weight;
  }
  return w;
}

bool countable_index(const Ordinal& alpha) { return alpha.is_small(); }

// aleph_(t-1) with t least such that alpha < w_t.
Aleph weight_of_level(const Ordinal& alpha) {
  if (alpha.is_small()) return Aleph();
  return Aleph(*alpha.initial_index());
}

Ordinal initial_above(const Ordinal& alpha) { return initial_ordinal(least_initial_index_above(alpha)); }

DimValue floor_of(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);
  return DimValue::finite(q.convert_to<std::uint64_t>());
}

bool known_nonempty(const Interval& i) { return i.lower >= DimValue::finite(0); }
bool known_empty(const Interval& i) { return i.upper.is_neg_one(); }

struct FamilyIndex {
  std::optional<Ordinal> cell, cantor, dense;
};

std::optional<Ordinal> combine_index(const std::optional<Ordinal>& a, const std::optional<Ordinal>& b) {
  if (!a || !b) return std::nullopt;
  if (b->is_finite()) return add(*a, *b);
  if (a->is_finite()) return add(*b, *a);
  return std::nullopt;
}

FamilyIndex family_index(const SpaceExpr& e) {
  return std::visit(overloaded{
                        [](const node::Point&) {
                          return FamilyIndex{Ordinal(), Ordinal(), Ordinal()};
                        },
                        [](const node::Cube& c) { return FamilyIndex{Ordinal::finite(c.n), {}, {}}; },
                        [](const node::Smirnov& s) { return FamilyIndex{s.alpha, {}, {}}; },
                        [](const node::FatCantor&) { return FamilyIndex{{}, Ordinal::finite(1), {}}; },
                        [](const node::SmirnovCantor& s) { return FamilyIndex{{}, s.alpha, {}}; },
                        [](const node::DenseSubset& s) { return FamilyIndex{{}, {}, s.alpha}; },
                        [](const node::Product& p) {
                          FamilyIndex a = family_index(*p.left);
                          FamilyIndex b = family_index(*p.right);
                          FamilyIndex out;
                          try {
                            out.cell = combine_index(a.cell, b.cell);
                            out.cantor = combine_index(a.cantor, b.cantor);
                            out.dense = combine_index(a.dense, b.dense);
                          } catch (const UnsupportedArithmetic&) {
                          }
                          return out;
                        },
                        [](const auto&) { return FamilyIndex{}; },
                    },
                    e.node());
}

struct ProductIdentity {
  std::string_view rule;
  SpaceRef atom;
};

std::optional<ProductIdentity> identify_product(const SpaceExpr& e, const EngineOptions& opt) {
  if (!e.as<node::Product>()) return std::nullopt;
  FamilyIndex f = family_index(e);
  if (f.cell && opt.enabled("ProductCellIdentity")) return ProductIdentity{"ProductCellIdentity", space::smirnov(*f.cell)};
  if (f.cantor && opt.enabled("ProductCantorIdentity")) {
    return ProductIdentity{"ProductCantorIdentity", space::smirnov_cantor(*f.cantor)};
  }
  if (f.dense && opt.enabled("ProductDenseIdentity")) {
    return ProductIdentity{"ProductDenseIdentity", space::dense_subset(*f.dense)};
  }
  return std::nullopt;
}

struct Candidate {
  std::string_view rule;
  Interval bound;
  std::string note;
};

class Evaluator {
 public:
  explicit Evaluator(const EngineOptions& opt) : opt_(opt) {}

  NodeResult eval(const SpaceExpr& e) const {
    std::vector<NodeResult> kids;
    for (const SpaceRef& c : e.children()) kids.push_back(eval(*c));

    NodeResult r;
    const std::string subject = pretty(e);
    r.declared = !e.declared().empty();
    for (const NodeResult& k : kids) {
      r.declared = r.declared || k.declared;
      r.d_trace.insert(r.d_trace.end(), k.d_trace.begin(), k.d_trace.end());
      r.t_trace.insert(r.t_trace.end(), k.t_trace.begin(), k.t_trace.end());
    }
    std::vector<Interval> kid_d, kid_t;
    for (const NodeResult& k : kids) {
      kid_d.push_back(k.d);
      kid_t.push_back(k.t);
    }

    if (auto id = identify_product(e, opt_); id && !any_empty(kids)) {
      NodeResult atom = eval(*id->atom);
      const std::string note = "identified with " + pretty(*id->atom);
      r.attrs = atom.attrs;
      r.hd = atom.hd;
      declare_attributes(e, r, subject);
      declare_hd(e, r, subject);
      apply(r, r.d, r.d_trace, {id->rule, atom.d, note}, kid_d, subject);
      d_caps(r, subject);
      apply(r, r.t, r.t_trace, {id->rule, atom.t, note}, kid_t, subject);
      t_caps(r, subject);
      return r;
    }

    r.attrs = infer(e, kids);
    declare_attributes(e, r, subject);
    r.hd = hd_fact(e, kids);
    declare_hd(e, r, subject);

    for (Candidate& c : d_rules(e, kids)) apply(r, r.d, r.d_trace, std::move(c), kid_d, subject);
    d_caps(r, subject);

    if (known_empty(r.d) && opt_.enabled("EmptyTdhd")) {
      apply(r, r.t, r.t_trace, {"EmptyTdhd", Interval::exact(DimValue::neg_one()), ""}, {r.d}, subject);
    }
    if (opt_.enabled("TdhdDominatesD") && r.t.lower < r.d.lower) {
      apply(r, r.t, r.t_trace, {"TdhdDominatesD", {r.d.lower, DimValue::omega_symbol(), false}, ""}, {r.d},
            subject);
    }
    for (Candidate& c : t_rules(e, kids, r)) apply(r, r.t, r.t_trace, std::move(c), kid_t, subject);
    t_caps(r, subject);
    return r;
  }

 private:
  static bool any_empty(const std::vector<NodeResult>& kids) {
    return std::any_of(kids.begin(), kids.end(), [](const NodeResult& k) { return known_empty(k.d); });
  }

  void apply(NodeResult& r, Interval& target, std::vector<RuleApplication>& trace, Candidate c,
             std::vector<Interval> inputs, const std::string& subject) const {
    if (!opt_.enabled(c.rule)) return;
    auto met = meet(target, c.bound);
    if (!met) {
      std::string msg = "rule " + std::string(c.rule) + " on '" + subject + "' yields " + c.bound.to_string() +
                        ", disjoint from " + target.to_string();
      if (r.declared) throw InconsistencyError("declaration contradicts derived bound: " + msg);
      throw RuleInconsistency(msg);
    }
    target = *met;
    const RuleInfo* info = find_rule(c.rule);
    trace.push_back({std::string(c.rule), std::string(info ? info->anchor : ""), subject, std::move(inputs), target,
                     std::move(c.note)});
  }

  // Applies a cap, recording it only when it tightens the bound.
  void cap(NodeResult& r, Interval& target, std::vector<RuleApplication>& trace, Candidate c,
           const std::string& subject) const {
    if (!opt_.enabled(c.rule)) return;
    auto met = meet(target, c.bound);
    if (met && *met == target) return;
    apply(r, target, trace, std::move(c), {}, subject);
  }

  void d_caps(NodeResult& r, const std::string& subject) const {
    if (r.hd.cls.is_finite()) {
      cap(r, r.d, r.d_trace,
          {"HDFloorCap", Interval::at_most(floor_of(r.hd.cls.value)), "HD " + r.hd.cls.to_string() + " via " + r.hd.source},
          subject);
    }
  }

  void t_caps(NodeResult& r, const std::string& subject) const {
    if (r.hd.cls.is_finite()) {
      cap(r, r.t, r.t_trace,
          {"HDFloorCap", Interval::at_most(floor_of(r.hd.cls.value)), "HD " + r.hd.cls.to_string() + " via " + r.hd.source},
          subject);
    }
    // Gate: the weight cap needs D(X) < Omega.
    const bool d_below_omega = !r.d.upper.is_omega_symbol() || r.d.upper_strict;
    if (r.attrs.weight && d_below_omega) {
      try {
        Ordinal bound = initial_ordinal(successor(r.attrs.weight->index()));
        cap(r, r.t, r.t_trace,
            {"WeightCap", Interval::at_most(DimValue::ord(bound)), "weight <= " + r.attrs.weight->to_string()},
            subject);
      } catch (const UnsupportedArithmetic&) {
      }
    }
  }

  Attributes infer(const SpaceExpr& e, const std::vector<NodeResult>& kids) const {
    std::vector<const NodeResult*> kp;
    for (const NodeResult& k : kids) kp.push_back(&k);
    auto compacts = [&] {
      std::vector<Tri> v;
      for (const NodeResult& k : kids) v.push_back(k.attrs.compact);
      return v;
    };
    auto separables = [&] {
      std::vector<Tri> v;
      for (const NodeResult& k : kids) v.push_back(k.attrs.separable);
      return v;
    };
    const Attributes small{Tri::True, Tri::True, Aleph()};
    auto level = [](const Ordinal& alpha) {
      if (countable_index(alpha)) return Attributes{Tri::True, Tri::True, Aleph()};
      return Attributes{Tri::False, Tri::False, weight_of_level(alpha)};
    };
    return std::visit(
        overloaded{
            [&](const node::Empty&) { return small; },
            [&](const node::Point&) { return small; },
            [&](const node::Cube&) { return small; },
            [&](const node::FatCantor&) { return small; },
            [&](const node::Smirnov& s) { return level(s.alpha); },
            [&](const node::SmirnovCantor& s) { return level(s.alpha); },
            [&](const node::DenseSubset& s) {
              Attributes a = level(s.alpha);
              // A countable dense subset of a nondegenerate S_a is not closed.
              if (countable_index(s.alpha) && !s.alpha.is_zero()) a.compact = Tri::False;
              return a;
            },
            [&](const node::Product&) {
              const NodeResult& a = kids[0];
              const NodeResult& b = kids[1];
              auto both = [&](Tri x, Tri y) {
                if (x == Tri::True && y == Tri::True) return Tri::True;
                if ((x == Tri::False && known_nonempty(b.d)) || (y == Tri::False && known_nonempty(a.d))) {
                  return Tri::False;
                }
                return Tri::Unknown;
              };
              return Attributes{both(a.attrs.compact, b.attrs.compact), both(a.attrs.separable, b.attrs.separable),
                                max_weight(kp)};
            },
            [&](const node::ClosedUnion&) {
              return Attributes{all_of(compacts()), all_of(separables()), max_weight(kp)};
            },
            [&](const node::LocallyFiniteUnion& u) {
              return Attributes{u.repeats ? Tri::Unknown : all_of(compacts()), all_of(separables()), max_weight(kp)};
            },
            [&](const node::Augment&) {
              return Attributes{Tri::Unknown, kids[0].attrs.separable, kids[0].attrs.weight};
            },
            [&](const node::Excision&) { return Attributes{Tri::Unknown, all_of(separables()), max_weight(kp)}; },
            [&](const node::AlexandrovSum&) {
              Tri c = all_of(compacts());
              return Attributes{c == Tri::True ? Tri::True : Tri::Unknown, all_of(separables()), max_weight(kp)};
            },
            [&](const node::Subspace&) {
              const Attributes& p = kids[0].attrs;
              return Attributes{Tri::Unknown, p.separable == Tri::True ? Tri::True : Tri::Unknown, p.weight};
            },
        },
        e.node());
  }

  void declare_attributes(const SpaceExpr& e, NodeResult& r, const std::string& subject) const {
    const Declarations& d = e.declared();
    Attributes& a = r.attrs;
    auto conflict = [&](const std::string& what) {
      throw InconsistencyError("declaration '" + what + "' contradicts inferred attributes of '" + subject + "'");
    };
    if (d.compact && *d.compact) {
      if (a.compact == Tri::False) conflict("compact");
      a.compact = Tri::True;
    }
    if (d.separable && *d.separable) {
      if (a.separable == Tri::False) conflict("separable");
      a.separable = Tri::True;
    }
    if (d.weight) {
      if (a.separable == Tri::False && d.weight->index().is_zero()) conflict("weight=" + d.weight->to_string());
      if (!a.weight || *d.weight < *a.weight) a.weight = d.weight;
    }
    // Compact metric spaces are separable; separable metric spaces have
    // weight aleph_0, and conversely.
    if (a.compact == Tri::True) {
      if (a.separable == Tri::False) conflict("compact");
      a.separable = Tri::True;
    }
    if (a.separable == Tri::True) a.weight = Aleph();
    if (a.weight && a.weight->index().is_zero()) {
      if (a.separable == Tri::False) conflict("weight");
      a.separable = Tri::True;
    }
  }

  HdFact hd_fact(const SpaceExpr& e, const std::vector<NodeResult>& kids) const {
    auto fact = [&](std::string_view rule, HDClass c) -> HdFact {
      if (!opt_.enabled(rule)) return {};
      return {std::move(c), std::string(rule)};
    };
    // Countable stability over the children, plus extra exact values.
    auto stable = [&](std::vector<Rational> extra) -> HdFact {
      bool exact = true;
      Rational v = 0;
      for (const Rational& x : extra) v = std::max(v, x);
      for (const NodeResult& k : kids) {
        if (!k.hd.cls.is_finite()) return {};
        exact = exact && k.hd.cls.kind == HDClass::Kind::FiniteExactly;
        v = std::max(v, k.hd.cls.value);
      }
      return fact("HDCountableStability", exact ? HDClass::exactly(v) : HDClass::at_most(v));
    };
    return std::visit(overloaded{
                          [&](const node::Empty&) { return fact("CountableZeroHD", HDClass::exactly(0)); },
                          [&](const node::Point&) { return fact("CountableZeroHD", HDClass::exactly(0)); },
                          [&](const node::Cube& c) { return fact("CubeHausdorff", HDClass::exactly(c.n)); },
                          [&](const node::FatCantor&) { return fact("FatCantorFullHD", HDClass::exactly(1)); },
                          [&](const node::Smirnov& s) -> HdFact {
                            if (auto n = s.alpha.as_finite()) return fact("SmirnovFiniteCell", HDClass::exactly(*n));
                            return {};
                          },
                          [&](const node::DenseSubset& s) -> HdFact {
                            if (countable_index(s.alpha)) return fact("CountableZeroHD", HDClass::exactly(0));
                            return {};
                          },
                          [&](const node::ClosedUnion&) { return stable({}); },
                          [&](const node::LocallyFiniteUnion&) { return stable({}); },
                          [&](const node::AlexandrovSum&) { return stable({Rational(0)}); },
                          [&](const node::Augment&) { return stable({}); },
                          [&](const node::Excision&) { return stable({}); },
                          [&](const node::Subspace&) -> HdFact {
                            const HDClass& p = kids[0].hd.cls;
                            if (!p.is_finite()) return {};
                            return fact("HDCountableStability", HDClass::at_most(p.value));
                          },
                          [&](const auto&) { return HdFact{}; },
                      },
                      e.node());
  }

  void declare_hd(const SpaceExpr& e, NodeResult& r, const std::string& subject) const {
    const auto& h = e.declared().hd;
    if (!h) return;
    const HDClass& c = r.hd.cls;
    bool clash = (c.kind == HDClass::Kind::FiniteExactly && c.value != *h) ||
                 (c.kind == HDClass::Kind::FiniteAtMost && c.value < *h);
    if (clash) {
      throw InconsistencyError("declared hd=" + to_string(*h) + " contradicts HD " + c.to_string() + " of '" +
                               subject + "' (" + r.hd.source + ")");
    }
    r.hd = {HDClass::exactly(*h), "declaration"};
  }

  std::vector<Candidate> d_rules(const SpaceExpr& e, const std::vector<NodeResult>& kids) const {
    using V = DimValue;
    auto exact = [](V v) { return Interval::exact(v); };
    std::vector<Interval> kd;
    for (const NodeResult& k : kids) kd.push_back(k.d);
    auto max_lower = [&](V floor) {
      V l = floor;
      for (const Interval& i : kd) l = dim_max(l, i.lower);
      return l;
    };
    return std::visit(
        overloaded{
            [&](const node::Empty&) { return std::vector<Candidate>{{"EmptyDef", exact(V::neg_one()), ""}}; },
            [&](const node::Point&) { return std::vector<Candidate>{{"PointZero", exact(V::finite(0)), ""}}; },
            [&](const node::Cube& c) { return std::vector<Candidate>{{"CubeExact", exact(V::finite(c.n)), ""}}; },
            [&](const node::FatCantor&) {
              return std::vector<Candidate>{{"CantorZeroDim", exact(V::finite(0)), ""}};
            },
            [&](const node::Smirnov& s) {
              return std::vector<Candidate>{{"SmirnovExact", exact(V::ord(s.alpha)), ""}};
            },
            [&](const node::SmirnovCantor& s) {
              if (countable_index(s.alpha)) {
                return std::vector<Candidate>{{"CantorAlphaZeroDim", exact(V::finite(0)), ""}};
              }
              return std::vector<Candidate>{
                  {"CantorAlphaZeroDimLarge", exact(V::finite(0)), "uncountable-index case: alpha >= w_1"}};
            },
            [&](const node::DenseSubset& s) {
              if (countable_index(s.alpha)) {
                return std::vector<Candidate>{{"DenseCountable", exact(V::finite(0)), ""}};
              }
              return std::vector<Candidate>{{"DenseSubspaceUpper", {V::finite(0), V::ord(s.alpha), false}, ""}};
            },
            [&](const node::Product&) {
              if (known_empty(kd[0]) || known_empty(kd[1])) {
                return std::vector<Candidate>{{"ProductEmpty", exact(V::neg_one()), ""}};
              }
              V lower = known_nonempty(kd[0]) && known_nonempty(kd[1]) ? max_lower(V::neg_one()) : V::neg_one();
              return std::vector<Candidate>{
                  {"ProductSubspaceLower", {lower, V::omega_symbol(), false}, "no product rule bounds the top"}};
            },
            [&](const node::ClosedUnion&) { return std::vector<Candidate>{{"ClosedUnionMax", max_of(kd), ""}}; },
            [&](const node::LocallyFiniteUnion& u) {
              return std::vector<Candidate>{
                  {"LocallyFiniteSum", max_of(kd), u.repeats ? "sup over the repeated prototypes" : ""}};
            },
            [&](const node::Augment&) {
              const Interval& core = kd[0];
              if (known_nonempty(core)) return std::vector<Candidate>{{"CountableAugmentD", core, ""}};
              if (known_empty(core)) {
                return std::vector<Candidate>{
                    {"CountableAugmentD", exact(V::finite(0)), "core empty: X is countable, X_* a point"}};
              }
              return std::vector<Candidate>{
                  {"CountableAugmentD", {V::finite(0), dim_max(core.upper, V::finite(0)), core.upper_strict},
                   "core possibly empty"}};
            },
            [&](const node::Excision&) {
              V upper = excision_upper(kd[0].upper, kd[1].upper);
              return std::vector<Candidate>{{"ExcisionBound", {max_lower(V::neg_one()), upper, false}, ""}};
            },
            [&](const node::AlexandrovSum& a) {
              Interval blocks = max_of(kd);
              V upper = excision_upper(dim_max(blocks.upper, V::finite(0)), V::finite(0));
              return std::vector<Candidate>{{"AlexandrovSumBound", {max_lower(V::finite(0)), upper, false},
                                             a.repeats ? "sup over the repeated prototypes" : ""}};
            },
            [&](const node::Subspace&) {
              return std::vector<Candidate>{
                  {"SubspaceMonotone", {V::neg_one(), kd[0].upper, kd[0].upper_strict}, ""}};
            },
        },
        e.node());
  }

  std::vector<Candidate> t_rules(const SpaceExpr& e, const std::vector<NodeResult>& kids,
                                 const NodeResult& self) const {
    using V = DimValue;
    std::vector<Interval> kt;
    for (const NodeResult& k : kids) kt.push_back(k.t);
    auto max_lower = [&](V floor) {
      V l = floor;
      for (const Interval& i : kt) l = dim_max(l, i.lower);
      return l;
    };
    const bool compact = self.attrs.compact == Tri::True;
    return std::visit(
        overloaded{
            [&](const node::Point&) {
              return std::vector<Candidate>{{"PointTdhd", Interval::exact(V::finite(0)), ""}};
            },
            [&](const node::FatCantor&) {
              return std::vector<Candidate>{{"FatCantorSurjection", {V::finite(1), V::omega_symbol(), false}, ""}};
            },
            [&](const node::Smirnov& s) -> std::vector<Candidate> {
              if (!countable_index(s.alpha)) return {};
              return {{"SmirnovTdhdCountable", Interval::at_most(V::ord(initial_ordinal(Ordinal::finite(1))), true),
                       ""}};
            },
            [&](const node::SmirnovCantor& s) -> std::vector<Candidate> {
              if (countable_index(s.alpha)) {
                return {{"SmirnovCantorTdhd", {V::ord(s.alpha), V::ord(initial_ordinal(Ordinal::finite(1))), true},
                         ""}};
              }
              return {{"CantorAlphaLarge", {V::ord(s.alpha), V::ord(initial_above(s.alpha)), false}, ""}};
            },
            [&](const node::DenseSubset& s) -> std::vector<Candidate> {
              if (!countable_index(s.alpha)) return {};
              return {{"DenseCountableTdhd", Interval::exact(V::finite(0)), ""}};
            },
            [&](const node::Product&) -> std::vector<Candidate> {
              if (!known_nonempty(kids[0].d) || !known_nonempty(kids[1].d)) return {};
              return {{"ProductSubspaceTdhd", {max_lower(V::neg_one()), V::omega_symbol(), false}, ""}};
            },
            [&](const node::ClosedUnion&) -> std::vector<Candidate> {
              if (compact && opt_.enabled("CompactClosedUnionMax")) return {{"CompactClosedUnionMax", max_of(kt), ""}};
              return {{"TdhdSubspaceMonotone", {max_lower(V::neg_one()), V::omega_symbol(), false}, "parts are subspaces"}};
            },
            [&](const node::LocallyFiniteUnion&) -> std::vector<Candidate> {
              if (compact && opt_.enabled("CompactLocallyFiniteSup")) {
                return {{"CompactLocallyFiniteSup", max_of(kt), ""}};
              }
              return {{"TdhdSubspaceMonotone", {max_lower(V::neg_one()), V::omega_symbol(), false}, "parts are subspaces"}};
            },
            [&](const node::Augment&) -> std::vector<Candidate> {
              const Interval& core = kt[0];
              if (known_nonempty(kids[0].d)) return {{"CountableAugmentEq", core, ""}};
              if (known_empty(kids[0].d)) {
                return {{"CountableAugmentEq", Interval::exact(V::finite(0)), "core empty: X_* a point"}};
              }
              return {{"CountableAugmentEq", {V::finite(0), dim_max(core.upper, V::finite(0)), core.upper_strict},
                       "core possibly empty"}};
            },
            [&](const node::Excision&) -> std::vector<Candidate> {
              return {{"TdhdSubspaceMonotone", {max_lower(V::neg_one()), V::omega_symbol(), false}, "parts are subspaces"}};
            },
            [&](const node::AlexandrovSum& a) -> std::vector<Candidate> {
              std::vector<Candidate> out{
                  {"TdhdSubspaceMonotone", {max_lower(V::finite(0)), V::omega_symbol(), false}, "blocks are subspaces"}};
              if (compact && !a.repeats) {
                Interval blocks = max_of(kt);
                out.push_back({"AlexandrovLocalSum",
                               {V::neg_one(), dim_add(V::finite(0), blocks.upper), blocks.upper_strict},
                               "X_0 = {compactification point}"});
              }
              return out;
            },
            [&](const node::Subspace&) -> std::vector<Candidate> {
              return {{"TdhdSubspaceMonotone", {V::neg_one(), kt[0].upper, kt[0].upper_strict}, ""}};
            },
            [&](const auto&) { return std::vector<Candidate>{}; },
        },
        e.node());
  }

  const EngineOptions& opt_;
};

}  // namespace

std::string_view to_string(Tri t) {
  switch (t) {
    case Tri::True:
      return "true";
    case Tri::False:
      return "false";
    case Tri::Unknown:
      break;
  }
  return "unknown";
}

std::string HDClass::to_string() const {
  switch (kind) {
    case Kind::FiniteExactly:
      return "= " + transdim::to_string(value);
    case Kind::FiniteAtMost:
      return "<= " + transdim::to_string(value);
    case Kind::Infinite:
      return "+inf";
    case Kind::Unknown:
      break;
  }
  return "unknown";
}

std::span<const RuleInfo> rule_catalog() { return kRules; }

const RuleInfo* find_rule(std::string_view name) {
  for (const RuleInfo& r : kRules) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

Evaluation BoundEngine::evaluate(const SpaceExpr& e) const {
  NodeResult r = Evaluator(options_).eval(e);
  Evaluation ev;
  ev.attributes = r.attrs;
  ev.d.set(r.d);
  ev.d.trace = std::move(r.d_trace);
  ev.tdhd.set(r.t);
  ev.tdhd.trace = std::move(r.t_trace);
  if (r.t.lower >= DimValue::ord(Ordinal::omega())) {
    ev.hd = HDClass::infinite();
  } else {
    ev.hd = r.hd.cls;
  }
  return ev;
}

DimValue excision_upper(const DimValue& complement_upper, const DimValue& closed_upper) {
  if (complement_upper.is_omega_symbol() || closed_upper.is_omega_symbol()) return DimValue::omega_symbol();
  if (complement_upper.is_neg_one()) return closed_upper;
  if (closed_upper.is_neg_one()) return complement_upper;
  Decomposition dec = decompose(complement_upper.ordinal());
  DimValue m = dim_max(DimValue::finite(dec.finite_part), closed_upper);
  return dim_add(DimValue::ord(dec.limit_part), m);
}

IntermediateTargets intermediate_targets(const DimValue& d, const Ordinal& alpha) {
  if (!d.is_ordinal()) throw DomainError("intermediate_targets needs an ordinal dimension, got " + d.to_string());
  const Ordinal limit = decompose(d.ordinal()).limit_part;
  if (alpha > limit) {
    throw DomainError("alpha = " + alpha.to_string() + " exceeds lambda(d) = " + limit.to_string());
  }
  IntermediateTargets out;
  out.base = sub_left(limit, alpha);
  out.beyond_omega_squared = limit >= Ordinal::omega_power(Ordinal::finite(2));
  return out;
}

Derivation derivation(const Evaluation& ev) { return {ev.d.trace, ev.tdhd.trace}; }

std::string format_derivation(const Derivation& d) {
  std::ostringstream os;
  auto section = [&](const char* title, const std::vector<RuleApplication>& trace) {
    os << title << '\n';
    std::size_t i = 1;
    for (const RuleApplication& a : trace) {
      os << "  " << i++ << ". " << a.rule << "  " << a.subject << "  => " << a.output.to_string() << '\n';
      os << "     " << a.anchor << '\n';
      if (!a.note.empty()) os << "     note: " << a.note << '\n';
    }
  };
  section("D-dimension:", d.d_trace);
  section("tDHD:", d.tdhd_trace);
  return os.str();
}

}  // namespace transdim
