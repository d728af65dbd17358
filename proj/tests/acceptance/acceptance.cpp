// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "cli.hpp"
#include "space_gen.hpp"

#include "transdim/boxdim.hpp"
#include "transdim/cantor.hpp"
#include "transdim/dsl.hpp"
#include "transdim/engine.hpp"
#include "transdim/finite_metric.hpp"
#include "transdim/ordinal_laws.hpp"
#include "transdim/phi.hpp"
#include "transdim/report.hpp"
#include "transdim/smirnov.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

using namespace transdim;

namespace {

// Pinned limits and tolerances.
constexpr std::size_t kLawCases = 10'000;
constexpr std::uint64_t kLawSeed = 1;
constexpr double kLawSeconds = 10.0;
constexpr std::size_t kExcisionPairs = 100;
constexpr std::size_t kMetricPointLimit = 300;
constexpr double kMetricSeconds = 60.0;
const Rational kPhiLow(19, 10);
const Rational kPhiHigh(2);
constexpr double kBoxTolerance1 = 0.15;
constexpr double kBoxTolerance2 = 0.3;
constexpr long long kBoxScales[] = {64, 256, 1024};
constexpr std::size_t kRoundTrips = 1000;
constexpr std::size_t kMaxTreeDepth = 6;

const char* const kAlphas[] = {"0", "1", "5", "w", "w+3", "w*2", "w^2", "w^2+w*2+3"};

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

DimValue dv(std::string_view s) { return DimValue::ord(parse_ordinal(s)); }

// Runs `eval EXPR --json` through the command-line front end.
BoundReport eval_cli(const std::string& expr) {
  std::ostringstream out, err;
  const int code = cli::run({"eval", expr, "--json"}, out, err);
  if (code != cli::kOk) throw std::runtime_error("eval " + expr + " exited " + std::to_string(code) + ": " + err.str());
  return report_from_json(out.str());
}

bool has_rule_at(const std::vector<RuleApplication>& trace, std::string_view rule, std::string_view subject) {
  for (const auto& r : trace) {
    if (r.rule == rule && r.subject == subject) return true;
  }
  return false;
}

Outcome ac1_laws() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto results = run_ordinal_laws(kLawCases, kLawSeed);
  const double secs = seconds_since(t0);
  for (const auto& r : results) {
    if (r.cases != kLawCases) return fail(r.name + " ran " + std::to_string(r.cases) + " cases");
    if (r.failures) return fail(r.name + ": " + r.counterexample);
  }
  if (secs >= kLawSeconds) return fail("took " + std::to_string(secs) + " s");
  return {true, std::to_string(results.size()) + " laws x " + std::to_string(kLawCases) + " cases, " +
                    std::to_string(secs) + " s"};
}

Outcome ac2_smirnov() {
  for (const char* a : kAlphas) {
    const BoundReport r = eval_cli(std::string("S(") + a + ")");
    if (r.d != Interval::exact(dv(a))) return fail(std::string("S(") + a + ") gave " + r.d.to_string());
  }
  return {true, std::to_string(std::size(kAlphas)) + " point intervals"};
}

Outcome ac3_cantor() {
  const DimValue w1 = dv("w_1");
  for (const char* a : kAlphas) {
    const BoundReport r = eval_cli(std::string("C(") + a + ")");
    if (r.d != Interval::exact(DimValue::finite(0))) return fail(std::string("C(") + a + ") D = " + r.d.to_string());
    if (r.tdhd != (Interval{dv(a), w1, true})) return fail(std::string("C(") + a + ") tDHD = " + r.tdhd.to_string());
  }
  return {true, "D = [0, 0], tDHD = [a, w_1) for every a"};
}

Outcome ac4_excision() {
  std::mt19937_64 rng(4);
  OrdinalSampler s(4);
  auto pick = [&](std::uint64_t lo, std::uint64_t hi) { return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng); };
  BoundEngine engine;
  std::size_t strict = 0;
  for (std::size_t i = 0; i < kExcisionPairs; ++i) {
    Ordinal c = add(s.limit(), Ordinal::finite(pick(0, 9)));
    if (pick(0, 4) == 0) c = Ordinal::finite(pick(0, 9));
    SpaceRef complement = space::smirnov(c);
    SpaceRef closed;
    Ordinal f;
    if (pick(0, 2) == 0) {
      f = s.any();
      closed = space::smirnov(f);
    } else {
      f = Ordinal::finite(pick(0, 9));
      closed = f.is_zero() ? space::point() : space::cube(*f.as_finite());
    }
    const DimValue up = engine.d_bounds(*space::excision(complement, closed)).upper;
    const DimValue naive = dim_add(DimValue::ord(c), DimValue::ord(f));
    const Decomposition dc = decompose(c);
    const Ordinal n = Ordinal::finite(dc.finite_part);
    const DimValue formula = DimValue::ord(add(dc.limit_part, std::max(n, f)));
    const std::string what = "excise(S(" + c.to_string() + "), " + pretty(closed) + ")";
    if (up != formula) return fail(what + ": upper " + up.to_string() + ", formula " + formula.to_string());
    if (!(up <= naive)) return fail(what + ": upper " + up.to_string() + " above naive " + naive.to_string());
    if (dc.finite_part > 0 && f.is_finite() && !f.is_zero() && !c.is_finite()) {
      if (!(up < naive)) return fail(what + ": no strict improvement over " + naive.to_string());
      ++strict;
    }
  }
  if (strict == 0) return fail("no sampled pair exercised the strict case");
  return {true, std::to_string(kExcisionPairs) + " pairs, " + std::to_string(strict) + " strict"};
}

Outcome ac5_augment() {
  const BoundReport r = eval_cli("aug(S(w+1))");
  if (r.d != Interval::exact(dv("w+1"))) return fail("D = " + r.d.to_string());
  return {true, "D = " + r.d.to_string()};
}

Outcome ac6_floor() {
  const BoundReport cube = eval_cli("I^1 with {hd=1}");
  if (cube.tdhd != Interval::exact(DimValue::finite(1))) return fail("I^1 tDHD = " + cube.tdhd.to_string());
  const BoundReport c = eval_cli("C(w)");
  if (c.hd != HDClass::infinite()) return fail("C(w) hd = " + c.hd.to_string());
  return {true, "tDHD(I^1) = [1, 1], HD(C(w)) = " + c.hd.to_string()};
}

Outcome ac7_weight() {
  const BoundReport r = eval_cli("Dsub(w_1)");
  if (!r.attributes.weight || *r.attributes.weight != aleph(Ordinal::finite(1))) return fail("weight is not aleph(1)");
  if (!upper_at_most(r.tdhd.upper, r.tdhd.upper_strict, dv("w_2"), false)) {
    return fail("tDHD upper " + r.tdhd.to_string());
  }
  if (!has_rule_at(r.trace.tdhd_trace, "WeightCap", "Dsub(w_1)")) return fail("WeightCap did not fire");
  const std::string gated = "prod(Dsub(w_1), I^1)";
  const BoundReport g = eval_cli(gated);
  if (!g.d.upper.is_omega_symbol()) return fail(gated + " D upper is " + g.d.upper.to_string());
  if (has_rule_at(g.trace.tdhd_trace, "WeightCap", gated)) return fail("WeightCap fired with D upper Omega");
  return {true, "tDHD " + r.tdhd.to_string() + "; gated on " + gated};
}

Outcome ac8_metric() {
  const auto t0 = std::chrono::steady_clock::now();
  TruncationOptions o;
  o.blocks = 6;
  o.grid = Rational(1, 8);
  TruncatedSpace s = truncate_smirnov(Ordinal::omega(), o);
  if (s.points().size() > kMetricPointLimit) return fail(std::to_string(s.points().size()) + " points");
  FiniteMetricSpace m = realize(s);
  MetricReport r = check_metric_axioms(m, kMetricPointLimit);
  if (!r.ok()) return fail(r.violation->kind + ": " + r.violation->detail);
  if (!r.bounded_by_one()) return fail("max distance " + to_string(r.max_distance));
  const Rational b = balance_constant(m);
  if (b != 1) return fail("balance constant " + to_string(b));
  const double secs = seconds_since(t0);
  if (secs >= kMetricSeconds) return fail("took " + std::to_string(secs) + " s");
  return {true, std::to_string(r.points) + " points, " + std::to_string(r.triples) + " triples, " +
                    std::to_string(secs) + " s"};
}

Outcome ac9_phi() {
  CantorSet c = fat_cantor(8);
  const LipschitzReport ends = phi_endpoint_report(c);
  if (ends.sup_ratio < kPhiLow || ends.sup_ratio > kPhiHigh) return fail("endpoint ratio " + to_string(ends.sup_ratio));
  PhiMap m = build_phi_alpha(Ordinal::omega(), c);
  if (!m.covers_target) return fail("phi_w misses target lattice points");
  const LipschitzReport glued = phi_alpha_report(m, c);
  if (glued.sup_ratio > 2) return fail("phi_w ratio " + to_string(glued.sup_ratio));
  return {true, "endpoints " + to_string(ends.sup_ratio) + ", phi_w " + to_string(glued.sup_ratio)};
}

Outcome ac10_measures() {
  for (std::size_t d = 1; d <= 10; ++d) {
    Rational want = Rational(1, 2);
    Rational p = 1;
    for (std::size_t i = 0; i <= d; ++i) p /= 2;
    want += p;
    if (fat_cantor(d).total_measure() != want) return fail("depth " + std::to_string(d));
  }
  return {true, "depths 1..10"};
}

Outcome ac11_boxdim() {
  std::vector<Rational> scales;
  for (long long n : kBoxScales) scales.emplace_back(1, n);
  const CantorSet c8 = fat_cantor(8), c5 = fat_cantor(5);
  const double s1 = box_dimension_estimate(c8.intervals(), 1, scales).slope;
  const double s2 = box_dimension_estimate(c5.intervals(), 2, scales).slope;
  if (std::abs(s1 - 1.0) > kBoxTolerance1) return fail("depth-8 estimate " + std::to_string(s1));
  if (std::abs(s2 - 2.0) > kBoxTolerance2) return fail("C^2 depth-5 estimate " + std::to_string(s2));
  double prev = -1;
  std::string powers;
  for (unsigned p = 1; p <= 3; ++p) {
    const double s = box_dimension_estimate(c8.intervals(), p, scales).slope;
    if (s < prev) return fail("power " + std::to_string(p) + " estimate decreased");
    prev = s;
    powers += (p > 1 ? ", " : "") + std::to_string(s);
  }
  return {true, "C " + std::to_string(s1) + ", C^2 " + std::to_string(s2) + ", powers " + powers};
}

Outcome ac12_parser() {
  gen::SpaceGen g(12, {.max_depth = kMaxTreeDepth, .declarations = true, .uncountable = true});
  std::vector<std::string> corpus;
  for (std::size_t i = 0; i < kRoundTrips; ++i) {
    SpaceRef e = g.tree();
    if (depth(*e) > kMaxTreeDepth) return fail("generator exceeded depth");
    const std::string text = pretty(e);
    ParseResult r = parse(text);
    if (!r.ok()) return fail(text + ": " + r.failure().to_string());
    if (!equal(r.expr(), e)) return fail("round trip changed " + text);
    if (i < 100) corpus.push_back(text);
  }
  for (const char* s : {"cunion(S(w), I^4)", "I^1 with {hd=1, compact}", "alex(C(w_1 + w), sub(Dsub(w^2)), ...)",
                        "excise(S(w^(w+1)*3 + 2), cantor(1/3))"}) {
    corpus.emplace_back(s);
  }
  std::size_t failures = 0;
  for (const std::string& text : corpus) {
    std::size_t last = 0;
    for (std::size_t cut = 0; cut < text.size(); ++cut) {
      ParseResult r = parse(std::string_view(text).substr(0, cut));
      if (r.ok()) continue;
      ++failures;
      const std::size_t pos = r.failure().position;
      if (pos > cut || pos < last) return fail("prefix '" + text.substr(0, cut) + "' reported " + std::to_string(pos));
      last = pos;
    }
  }
  return {true, std::to_string(kRoundTrips) + " round trips, " + std::to_string(failures) + " malformed prefixes"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 ordinal law suite", ac1_laws},
      {"AC2 Smirnov exactness", ac2_smirnov},
      {"AC3 zero-dimensional Cantor atoms", ac3_cantor},
      {"AC4 excision tightness", ac4_excision},
      {"AC5 countable augmentation", ac5_augment},
      {"AC6 HD floor rule", ac6_floor},
      {"AC7 weight cap and gate", ac7_weight},
      {"AC8 metric certification", ac8_metric},
      {"AC9 phi Lipschitz", ac9_phi},
      {"AC10 fat Cantor measures", ac10_measures},
      {"AC11 box-dimension evidence", ac11_boxdim},
      {"AC12 parser round trip", ac12_parser},
  };
  bool all = true;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
