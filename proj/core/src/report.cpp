#include "transdim/report.hpp"

#include "transdim/dsl.hpp"
#include "transdim/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace transdim {
namespace {

using nlohmann::json;

json interval_json(const Interval& i) {
  return {{"lower", i.lower.to_string()}, {"upper", i.upper.to_string()}, {"upper_strict", i.upper_strict}};
}

Interval interval_from(const json& j) {
  return {DimValue::parse(j.at("lower").get<std::string>()), DimValue::parse(j.at("upper").get<std::string>()),
          j.at("upper_strict").get<bool>()};
}

Tri tri_from(const std::string& s) {
  if (s == "true") return Tri::True;
  if (s == "false") return Tri::False;
  if (s == "unknown") return Tri::Unknown;
  throw ValidationError("bad tri-state value '" + s + "'");
}

json hd_json(const HDClass& h) {
  switch (h.kind) {
    case HDClass::Kind::FiniteExactly:
      return {{"kind", "finite_exactly"}, {"value", to_string(h.value)}};
    case HDClass::Kind::FiniteAtMost:
      return {{"kind", "finite_at_most"}, {"value", to_string(h.value)}};
    case HDClass::Kind::Infinite:
      return {{"kind", "infinite"}};
    case HDClass::Kind::Unknown:
      break;
  }
  return {{"kind", "unknown"}};
}

HDClass hd_from(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "finite_exactly") return HDClass::exactly(parse_rational(j.at("value").get<std::string>()));
  if (kind == "finite_at_most") return HDClass::at_most(parse_rational(j.at("value").get<std::string>()));
  if (kind == "infinite") return HDClass::infinite();
  if (kind == "unknown") return HDClass::unknown();
  throw ValidationError("bad hd_class kind '" + kind + "'");
}

json trace_json(const std::vector<RuleApplication>& trace) {
  json arr = json::array();
  for (const RuleApplication& a : trace) {
    json inputs = json::array();
    for (const Interval& i : a.inputs) inputs.push_back(interval_json(i));
    arr.push_back({{"rule", a.rule},
                   {"anchor", a.anchor},
                   {"subject", a.subject},
                   {"inputs", inputs},
                   {"output", interval_json(a.output)},
                   {"note", a.note}});
  }
  return arr;
}

std::vector<RuleApplication> trace_from(const json& arr) {
  std::vector<RuleApplication> out;
  for (const json& a : arr) {
    RuleApplication r;
    r.rule = a.at("rule").get<std::string>();
    r.anchor = a.at("anchor").get<std::string>();
    r.subject = a.at("subject").get<std::string>();
    for (const json& i : a.at("inputs")) r.inputs.push_back(interval_from(i));
    r.output = interval_from(a.at("output"));
    r.note = a.at("note").get<std::string>();
    out.push_back(std::move(r));
  }
  return out;
}

std::string weight_text(const std::optional<Aleph>& w) { return w ? w->to_string() : "unknown"; }

}  // namespace

BoundReport make_report(std::string input, const SpaceExpr& e, const Evaluation& ev) {
  BoundReport r;
  r.input = std::move(input);
  r.normalized = pretty(e);
  r.attributes = ev.attributes;
  r.d = ev.d.interval();
  r.tdhd = ev.tdhd.interval();
  r.hd = ev.hd;
  r.trace = derivation(ev);
  return r;
}

std::string to_json(const BoundReport& r) {
  json attrs = {{"compact", std::string(to_string(r.attributes.compact))},
                {"separable", std::string(to_string(r.attributes.separable))},
                {"weight", r.attributes.weight ? json(r.attributes.weight->index().to_string()) : json(nullptr)}};
  json doc = {{"input", r.input},
              {"normalized", r.normalized},
              {"attributes", attrs},
              {"d", interval_json(r.d)},
              {"tdhd", interval_json(r.tdhd)},
              {"hd_class", hd_json(r.hd)},
              {"trace", {{"d", trace_json(r.trace.d_trace)}, {"tdhd", trace_json(r.trace.tdhd_trace)}}},
              {"engine_version", r.engine_version}};
  return doc.dump(2) + "\n";
}

BoundReport report_from_json(std::string_view text) {
  try {
    json doc = json::parse(text);
    BoundReport r;
    r.input = doc.at("input").get<std::string>();
    r.normalized = doc.at("normalized").get<std::string>();
    const json& a = doc.at("attributes");
    r.attributes.compact = tri_from(a.at("compact").get<std::string>());
    r.attributes.separable = tri_from(a.at("separable").get<std::string>());
    if (!a.at("weight").is_null()) r.attributes.weight = Aleph(parse_ordinal(a.at("weight").get<std::string>()));
    r.d = interval_from(doc.at("d"));
    r.tdhd = interval_from(doc.at("tdhd"));
    r.hd = hd_from(doc.at("hd_class"));
    r.trace.d_trace = trace_from(doc.at("trace").at("d"));
    r.trace.tdhd_trace = trace_from(doc.at("trace").at("tdhd"));
    r.engine_version = doc.at("engine_version").get<std::string>();
    return r;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed bound report: ") + e.what());
  }
}

std::string format_human(const BoundReport& r, bool with_trace) {
  std::ostringstream os;
  os << "input:      " << r.input << '\n';
  os << "normalized: " << r.normalized << '\n';
  os << "compact: " << to_string(r.attributes.compact) << "  separable: " << to_string(r.attributes.separable)
     << "  weight: " << weight_text(r.attributes.weight) << '\n';
  os << "D:    " << r.d.to_string() << '\n';
  os << "tDHD: " << r.tdhd.to_string() << '\n';
  os << "HD:   " << r.hd.to_string() << '\n';
  if (with_trace) os << '\n' << format_derivation(r.trace);
  return os.str();
}

}  // namespace transdim
