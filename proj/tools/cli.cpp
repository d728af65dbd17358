#include "cli.hpp"

#include "transdim/boxdim.hpp"
#include "transdim/dsl.hpp"
#include "transdim/engine.hpp"
#include "transdim/errors.hpp"
#include "transdim/finite_metric.hpp"
#include "transdim/ordinal_laws.hpp"
#include "transdim/phi.hpp"
#include "transdim/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace transdim::cli {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EvalArgs {
  std::string expr;
  std::string file;
  bool json = false;
  bool trace = false;
  std::vector<std::string> disabled;
};

struct LawArgs {
  std::size_t cases = 10000;
  std::uint64_t seed = 1;
  bool json = false;
};

struct CheckArgs {
  std::string space = "S:w";
  std::size_t blocks = 6;
  std::string grid = "1/8";
  std::size_t cap = 48;
  std::size_t budget = kDefaultPointBudget;
  bool verbatim = false;
  bool json = false;
};

struct PhiArgs {
  std::size_t depth = 8;
  std::string alpha;
  std::size_t blocks = 6;
  std::string grid = "1/8";
  std::size_t cap = 48;
  bool report = false;
  bool json = false;
};

struct BoxArgs {
  std::string set = "cantor:8";
  std::string scales = "1/64,1/256,1/1024";
  bool csv = false;
  bool json = false;
};

std::string decimal(const Rational& r) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << to_double(r);
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

SpaceRef parse_or_throw(const std::string& text) {
  ParseResult r = parse(text);
  if (!r.ok()) throw UsageError(r.failure().to_string());
  return r.expr();
}

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  if (a.expr.empty() == a.file.empty()) throw UsageError("eval needs exactly one of EXPR or --file");
  const std::string text = a.file.empty() ? a.expr : read_file(a.file);
  SpaceRef e = parse_or_throw(text);
  EngineOptions opt;
  for (const std::string& r : a.disabled) {
    if (!find_rule(r)) throw UsageError("unknown rule '" + r + "'");
    opt.disabled_rules.insert(r);
  }
  BoundReport rep = make_report(text, *e, BoundEngine(opt).evaluate(*e));
  out << (a.json ? to_json(rep) : format_human(rep, a.trace));
  return kOk;
}

int cmd_trace(const std::string& expr, std::ostream& out) {
  SpaceRef e = parse_or_throw(expr);
  out << format_derivation(derivation(BoundEngine().evaluate(*e)));
  return kOk;
}

int cmd_rules(std::ostream& out) {
  for (const RuleInfo& r : rule_catalog()) out << r.name << '\t' << r.anchor << '\n';
  return kOk;
}

int cmd_laws(const LawArgs& a, std::ostream& out) {
  const auto results = run_ordinal_laws(a.cases, a.seed);
  bool ok = true;
  json arr = json::array();
  for (const LawResult& r : results) {
    ok = ok && r.failures == 0;
    if (a.json) {
      arr.push_back({{"law", r.name},
                     {"cases", r.cases},
                     {"vacuous", r.vacuous},
                     {"failures", r.failures},
                     {"counterexample", r.counterexample}});
    } else {
      out << (r.failures == 0 ? "PASS " : "FAIL ") << r.name << ": " << r.cases << " cases, " << r.failures
          << " failures";
      if (r.vacuous) out << ", " << r.vacuous << " vacuous";
      if (!r.counterexample.empty()) out << " (first: " << r.counterexample << ")";
      out << '\n';
    }
  }
  if (a.json) out << json{{"seed", a.seed}, {"laws", arr}}.dump(2) << '\n';
  return ok ? kOk : kCheckFailed;
}

Rational grid_or_throw(const std::string& g) {
  Rational r = parse_rational(g);
  if (r <= 0 || r > 1 || numerator(r) != 1) throw UsageError("--grid must be 1/N, got " + g);
  return r;
}

Ordinal space_ordinal(const std::string& spec) {
  if (spec.rfind("S:", 0) != 0) throw UsageError("--space must look like S:<ordinal>, got '" + spec + "'");
  return parse_ordinal(spec.substr(2));
}

int cmd_metric_check(const CheckArgs& a, std::ostream& out) {
  TruncationOptions o;
  o.blocks = a.blocks;
  o.grid = grid_or_throw(a.grid);
  o.block_cap = a.cap;
  o.variant = a.verbatim ? MetricVariant::Verbatim : MetricVariant::BoundedByOne;
  const Ordinal alpha = space_ordinal(a.space);
  TruncatedSpace s = truncate_smirnov(alpha, o);
  if (s.points().size() > a.budget) throw BudgetExceeded(s.points().size(), a.budget);
  FiniteMetricSpace m = realize(s);
  MetricReport r = check_metric_axioms(m, a.budget);
  std::optional<Rational> balance;
  if (s.is_limit_level() && s.blocks().size() >= 2) balance = balance_constant(m);

  if (a.json) {
    json doc = {{"command", "metric check"},
                {"shape", alpha.to_string()},
                {"blocks", a.blocks},
                {"grid", to_string(o.grid)},
                {"block_cap", a.cap},
                {"variant", a.verbatim ? "verbatim" : "bounded_by_one"},
                {"points", r.points},
                {"triples", r.triples},
                {"axioms_ok", r.ok()},
                {"max_distance", to_string(r.max_distance)},
                {"bounded_by_one", r.bounded_by_one()},
                {"balance_constant", balance ? json(to_string(*balance)) : json(nullptr)},
                {"engine_version", kEngineVersion}};
    if (r.violation) {
      doc["violation"] = {{"kind", r.violation->kind},
                          {"i", r.violation->i},
                          {"j", r.violation->j},
                          {"k", r.violation->k},
                          {"detail", r.violation->detail}};
    } else {
      doc["violation"] = nullptr;
    }
    out << doc.dump(2) << '\n';
  } else {
    out << "space:    S(" << alpha.to_string() << "), " << a.blocks << " blocks, grid " << to_string(o.grid)
        << ", block cap " << a.cap << (a.verbatim ? ", verbatim metric" : "") << '\n';
    out << "points:   " << r.points << '\n';
    out << "triples:  " << r.triples << '\n';
    out << "axioms:   " << (r.ok() ? "ok" : "VIOLATED: " + r.violation->kind + " " + r.violation->detail) << '\n';
    out << "max dist: " << to_string(r.max_distance) << (r.bounded_by_one() ? "" : "  (exceeds 1)") << '\n';
    if (balance) out << "balance:  " << to_string(*balance) << '\n';
  }
  return r.ok() && r.bounded_by_one() ? kOk : kCheckFailed;
}

json lip_json(const LipschitzReport& r) {
  return {{"sup_ratio", to_string(r.sup_ratio)},
          {"sup_ratio_decimal", decimal(r.sup_ratio)},
          {"pairs", r.pair_count},
          {"claimed_bound", to_string(r.claimed_bound)},
          {"violated", r.violated()}};
}

int cmd_metric_phi(const PhiArgs& a, std::ostream& out) {
  CantorSet c = fat_cantor(a.depth);
  LipschitzReport ends = phi_endpoint_report(c);
  std::optional<PhiMap> map;
  std::optional<LipschitzReport> glued;
  if (!a.alpha.empty()) {
    TruncationOptions o;
    o.blocks = a.blocks;
    o.grid = grid_or_throw(a.grid);
    o.block_cap = a.cap;
    map = build_phi_alpha(parse_ordinal(a.alpha), c, o);
    glued = phi_alpha_report(*map, c);
  }
  bool ok = !ends.violated() && (!glued || (!glued->violated() && map->covers_target));
  if (a.json) {
    json doc = {{"command", "metric phi"},
                {"depth", a.depth},
                {"measure", to_string(c.total_measure())},
                {"endpoint_report", lip_json(ends)},
                {"engine_version", kEngineVersion}};
    if (glued) {
      json g = lip_json(*glued);
      g["alpha"] = map->alpha.to_string();
      g["samples"] = map->source.size();
      g["covers_target"] = map->covers_target;
      doc["glued_report"] = g;
    }
    out << doc.dump(2) << '\n';
    return ok ? kOk : kCheckFailed;
  }
  out << "fat Cantor depth " << a.depth << ", measure " << to_string(c.total_measure()) << '\n';
  out << "phi endpoints: sup ratio " << to_string(ends.sup_ratio) << " (" << decimal(ends.sup_ratio)
      << "), claimed <= " << to_string(ends.claimed_bound) << (ends.violated() ? "  VIOLATED" : "") << '\n';
  if (a.report) {
    const auto e = c.endpoints();
    out << "  pairs " << ends.pair_count << ", witness [" << to_string(e[ends.witness_i]) << ", "
        << to_string(e[ends.witness_j]) << "]\n";
  }
  if (glued) {
    out << "phi_" << map->alpha.to_string() << ": sup ratio " << to_string(glued->sup_ratio) << " ("
        << decimal(glued->sup_ratio) << "), claimed <= " << to_string(glued->claimed_bound)
        << (glued->violated() ? "  VIOLATED" : "") << ", covers target grid: " << (map->covers_target ? "yes" : "no")
        << '\n';
    if (a.report) {
      out << "  samples " << map->source.size() << ", pairs " << glued->pair_count << ", witness "
          << map->source[glued->witness_i].to_string() << " / " << map->source[glued->witness_j].to_string()
          << '\n';
    }
  }
  return ok ? kOk : kCheckFailed;
}

std::vector<Rational> split_scales(const std::string& list) {
  std::vector<Rational> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

int cmd_metric_boxdim(const BoxArgs& a, std::ostream& out) {
  std::string base = a.set;
  unsigned power = 1;
  if (auto caret = base.find('^'); caret != std::string::npos) {
    power = static_cast<unsigned>(std::stoul(base.substr(caret + 1)));
    base = base.substr(0, caret);
  }
  std::size_t depth = 0;
  if (base.rfind("cantor:", 0) == 0) {
    depth = std::stoul(base.substr(7));
  } else if (base != "interval") {
    throw UsageError("--set must be cantor:<depth>[^p] or interval[^p], got '" + a.set + "'");
  }
  CantorSet c = fat_cantor(depth);
  const std::vector<Rational> scales = split_scales(a.scales);
  BoxEstimate est = box_dimension_estimate(c.intervals(), power, scales);
  if (a.csv) {
    out << "scale,count\n";
    for (const BoxSample& s : est.samples) out << to_string(s.scale) << ',' << s.count << '\n';
    return kOk;
  }
  if (a.json) {
    json samples = json::array();
    for (const BoxSample& s : est.samples) samples.push_back({{"scale", to_string(s.scale)}, {"count", s.count}});
    std::ostringstream slope;
    slope << std::setprecision(6) << std::fixed << est.slope;
    out << json{{"command", "metric boxdim"},
                {"set", a.set},
                {"samples", samples},
                {"slope", slope.str()},
                {"engine_version", kEngineVersion}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << "set " << a.set << '\n';
  for (const BoxSample& s : est.samples) out << "  scale " << to_string(s.scale) << ": " << s.count << " boxes\n";
  out << "slope " << std::setprecision(6) << std::fixed << est.slope << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transfinite dimension bounds and Smirnov-space metric checks", "transdim"};
  app.require_subcommand(1);

  EvalArgs eval;
  auto* e = app.add_subcommand("eval", "Evaluate D, tDHD and HD bounds of an expression");
  e->add_option("expr", eval.expr, "Space expression");
  e->add_option("--file", eval.file, "Read the expression from a file");
  e->add_flag("--json", eval.json, "Machine-readable report");
  e->add_flag("--trace", eval.trace, "Append the derivation");
  e->add_option("--disable", eval.disabled, "Rule names that must not fire");

  std::string trace_expr;
  auto* t = app.add_subcommand("trace", "Print the derivation of an expression");
  t->add_option("expr", trace_expr, "Space expression")->required();

  auto* rules = app.add_subcommand("rules", "List the rule catalog");

  LawArgs laws;
  auto* l = app.add_subcommand("check-ordinals", "Run the randomized ordinal law suite");
  l->add_option("--cases", laws.cases, "Cases per law");
  l->add_option("--seed", laws.seed, "Seed");
  l->add_flag("--json", laws.json, "Machine-readable output");

  auto* metric = app.add_subcommand("metric", "Finite Smirnov-space and fat Cantor constructions");
  metric->require_subcommand(1);

  CheckArgs check;
  auto* mc = metric->add_subcommand("check", "Certify the metric axioms of a truncation exactly");
  mc->add_option("--space", check.space, "S:<ordinal>");
  mc->add_option("--blocks", check.blocks, "Blocks per limit level");
  mc->add_option("--grid", check.grid, "Grid step 1/N");
  mc->add_option("--cap", check.cap, "Points kept per block");
  mc->add_option("--budget", check.budget, "Point budget for the triple check");
  mc->add_flag("--verbatim", check.verbatim, "Use the limit formula without the min{1, .} bound");
  mc->add_flag("--json", check.json, "Machine-readable output");

  PhiArgs phi_args;
  auto* mp = metric->add_subcommand("phi", "Lipschitz estimates for phi and its glued extensions");
  mp->add_option("--depth", phi_args.depth, "Fat Cantor depth");
  mp->add_option("--alpha", phi_args.alpha, "Also build phi_alpha for this ordinal");
  mp->add_option("--blocks", phi_args.blocks, "Blocks per limit level");
  mp->add_option("--grid", phi_args.grid, "Grid step 1/N");
  mp->add_option("--cap", phi_args.cap, "Points kept per block");
  mp->add_flag("--report", phi_args.report, "Include pair counts and witnesses");
  mp->add_flag("--json", phi_args.json, "Machine-readable output");

  BoxArgs box;
  auto* mb = metric->add_subcommand("boxdim", "Box-counting dimension estimate");
  mb->add_option("--set", box.set, "cantor:<depth>[^p] or interval[^p]");
  mb->add_option("--scales", box.scales, "Comma-separated decreasing scales 1/N");
  mb->add_flag("--csv", box.csv, "Print (scale, count) pairs as CSV");
  mb->add_flag("--json", box.json, "Machine-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& h) {
    return app.exit(h, out, err);
  } catch (const CLI::CallForAllHelp& h) {
    return app.exit(h, out, err);
  } catch (const CLI::ParseError& pe) {
    app.exit(pe, out, err);
    return kUsageError;
  }

  try {
    if (*e) return cmd_eval(eval, out);
    if (*t) return cmd_trace(trace_expr, out);
    if (*rules) return cmd_rules(out);
    if (*l) return cmd_laws(laws, out);
    if (*mc) return cmd_metric_check(check, out);
    if (*mp) return cmd_metric_phi(phi_args, out);
    if (*mb) return cmd_metric_boxdim(box, out);
  } catch (const UsageError& u) {
    err << "error: " << u.what() << '\n';
    return kUsageError;
  } catch (const BudgetExceeded& b) {
    err << "refused: " << b.what() << '\n';
    return kUsageError;
  } catch (const RuleInconsistency& r) {
    err << "internal rule inconsistency: " << r.what() << '\n';
    return kInternalError;
  } catch (const std::invalid_argument& v) {  // ValidationError, std::stoul
    err << "error: " << v.what() << '\n';
    return kUsageError;
  } catch (const std::exception& x) {  // DomainError, InconsistencyError, ConstructionError, ...
    err << "error: " << x.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace transdim::cli
