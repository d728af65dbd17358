#pragma once

// Bound propagation over SpaceExpr trees.
//
// A single bottom-up pass computes, for every node, inferred attributes, a
// Hausdorff-dimension fact, and sound intervals for D and tDHD. Each rule
// that fires is appended to the node's trace; rules are tried in the fixed
// order exact atoms, equalities, max rules, sum rules, caps.

#include "transdim/dim_value.hpp"
#include "transdim/space_expr.hpp"

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace transdim {

inline constexpr std::string_view kEngineVersion = "transdim-engine 1.0.0";

enum class Tri { False, True, Unknown };
std::string_view to_string(Tri t);

struct Attributes {
  Tri compact = Tri::Unknown;
  Tri separable = Tri::Unknown;
  std::optional<Aleph> weight;  // upper bound on the weight

  friend bool operator==(const Attributes&, const Attributes&) = default;
};

struct HDClass {
  enum class Kind { FiniteAtMost, FiniteExactly, Infinite, Unknown };
  Kind kind = Kind::Unknown;
  Rational value;  // meaningful for the two finite kinds

  static HDClass unknown() { return {}; }
  static HDClass infinite() { return {Kind::Infinite, 0}; }
  static HDClass exactly(Rational v) { return {Kind::FiniteExactly, std::move(v)}; }
  static HDClass at_most(Rational v) { return {Kind::FiniteAtMost, std::move(v)}; }
  bool is_finite() const { return kind == Kind::FiniteAtMost || kind == Kind::FiniteExactly; }
  std::string to_string() const;

  friend bool operator==(const HDClass&, const HDClass&) = default;
};

enum class RuleKind { Atom, Equality, Max, Sum, Cap };

struct RuleInfo {
  std::string_view name;
  std::string_view anchor;
  RuleKind kind;
};

// Every rule the engine can fire, in catalog order.
std::span<const RuleInfo> rule_catalog();
const RuleInfo* find_rule(std::string_view name);

struct EngineOptions {
  // Rules named here never fire; their nodes fall back to wider bounds.
  std::set<std::string, std::less<>> disabled_rules;

  bool enabled(std::string_view rule) const { return !disabled_rules.contains(rule); }
};

struct Evaluation {
  Attributes attributes;
  DimBound d;
  DimBound tdhd;
  HDClass hd;
};

class BoundEngine {
 public:
  BoundEngine() = default;
  explicit BoundEngine(EngineOptions options) : options_(std::move(options)) {}

  // All four results in one pass. Throws InconsistencyError when a
  // declaration contradicts a derived fact, RuleInconsistency when two
  // rules disagree without any declaration involved.
  Evaluation evaluate(const SpaceExpr& e) const;

  Attributes infer_attributes(const SpaceExpr& e) const { return evaluate(e).attributes; }
  DimBound d_bounds(const SpaceExpr& e) const { return evaluate(e).d; }
  DimBound tdhd_bounds(const SpaceExpr& e) const { return evaluate(e).tdhd; }
  HDClass hd_class(const SpaceExpr& e) const { return evaluate(e).hd; }

  const EngineOptions& options() const { return options_; }

 private:
  EngineOptions options_;
};

struct IntermediateTargets {
  // Closed subspaces of dimension base + k exist for some finite k.
  Ordinal base;
  // Set when lambda(d) >= w^2, where the guarantee no longer reaches every
  // limit level below d.
  bool beyond_omega_squared = false;
};

// Upper bound lambda(u_c) + max{n(u_c), u_f} for X given as (X \ F, F) with
// D(X \ F) <= u_c and D(F) <= u_f. Monotone in both arguments.
DimValue excision_upper(const DimValue& complement_upper, const DimValue& closed_upper);

// Requires d an ordinal with alpha <= lambda(d); throws DomainError otherwise.
IntermediateTargets intermediate_targets(const DimValue& d, const Ordinal& alpha);

struct Derivation {
  std::vector<RuleApplication> d_trace;
  std::vector<RuleApplication> tdhd_trace;

  friend bool operator==(const Derivation&, const Derivation&) = default;
};

Derivation derivation(const Evaluation& ev);
std::string format_derivation(const Derivation& d);

}  // namespace transdim
