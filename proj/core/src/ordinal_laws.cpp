#include "transdim/ordinal_laws.hpp"

#include <algorithm>
#include <functional>

namespace transdim {

Ordinal OrdinalSampler::from_exponents(std::vector<Ordinal> exps) {
  std::sort(exps.begin(), exps.end(), std::greater<>());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  std::vector<CnfTerm> terms;
  for (Ordinal& e : exps) terms.push_back({std::move(e), uniform(1, 9)});
  return normalize_terms(std::move(terms));
}

Ordinal OrdinalSampler::below_power(const Ordinal& e) {
  if (e.is_zero()) return Ordinal();
  std::vector<Ordinal> exps;
  const std::uint64_t k = uniform(0, 3);
  for (std::uint64_t i = 0; i < k; ++i) exps.push_back(below(e));
  return from_exponents(std::move(exps));
}

Ordinal OrdinalSampler::below(const Ordinal& a) {
  const auto terms = a.terms();
  const std::size_t i = static_cast<std::size_t>(uniform(0, terms.size() - 1));
  std::vector<CnfTerm> prefix(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(i));
  const std::uint64_t c = uniform(0, terms[i].coefficient - 1);
  if (c > 0) prefix.push_back({terms[i].exponent, c});
  return add(normalize_terms(std::move(prefix)), below_power(terms[i].exponent));
}

Ordinal OrdinalSampler::exponent() { return below_power(Ordinal::finite(5)); }

Ordinal OrdinalSampler::any() {
  std::vector<Ordinal> exps;
  const std::uint64_t k = uniform(0, 4);
  for (std::uint64_t i = 0; i < k; ++i) exps.push_back(exponent());
  return from_exponents(std::move(exps));
}

Ordinal OrdinalSampler::limit() {
  for (;;) {
    Ordinal x = decompose(any()).limit_part;
    if (!x.is_zero()) return x;
  }
}

namespace {

struct Outcome {
  bool vacuous = false;
  bool ok = true;
  std::string detail;
};

using Law = std::function<Outcome(OrdinalSampler&)>;

std::string show(std::initializer_list<std::pair<const char*, const Ordinal*>> xs) {
  std::string out;
  for (const auto& [name, o] : xs) {
    if (!out.empty()) out += ", ";
    out += std::string(name) + " = " + o->to_string();
  }
  return out;
}

Outcome check(bool ok, std::string detail) { return {false, ok, ok ? std::string() : std::move(detail)}; }

// a = P + w^e*c with a not indecomposable; returns (P + w^e*(c-1), w^e).
std::pair<Ordinal, Ordinal> split_last_unit(const Ordinal& a) {
  std::vector<CnfTerm> terms(a.terms().begin(), a.terms().end());
  CnfTerm last = terms.back();
  terms.pop_back();
  if (last.coefficient > 1) terms.push_back({last.exponent, last.coefficient - 1});
  return {normalize_terms(std::move(terms)), Ordinal::omega_power(last.exponent)};
}

const std::vector<std::pair<std::string, Law>>& laws() {
  static const std::vector<std::pair<std::string, Law>> all = {
      {"add associativity",
       [](OrdinalSampler& s) {
         Ordinal a = s.any(), b = s.any(), c = s.any();
         return check(add(add(a, b), c) == add(a, add(b, c)), show({{"a", &a}, {"b", &b}, {"c", &c}}));
       }},
      {"left subtraction roundtrip",
       [](OrdinalSampler& s) {
         Ordinal a = s.any();
         Ordinal b = (!a.is_zero() && s.uniform(0, 1)) ? s.below(a) : s.any();
         if (b > a) std::swap(a, b);
         return check(add(b, sub_left(a, b)) == a, show({{"a", &a}, {"b", &b}}));
       }},
      {"decomposition roundtrip",
       [](OrdinalSampler& s) {
         Ordinal a = s.any();
         Decomposition d = decompose(a);
         bool ok = add(d.limit_part, Ordinal::finite(d.finite_part)) == a &&
                   decompose(d.limit_part).finite_part == 0 && (d.limit_part.is_zero() || d.limit_part.is_limit());
         return check(ok, show({{"a", &a}}));
       }},
      {"limit part of a left difference",
       [](OrdinalSampler& s) {
         Ordinal alpha = s.any();
         Ordinal lam = decompose(alpha).limit_part;
         Ordinal beta = (lam.is_zero() || s.uniform(0, 3) == 0) ? lam : s.below(lam);
         Ordinal g = sub_left(lam, beta);
         return check(g == decompose(g).limit_part, show({{"alpha", &alpha}, {"beta", &beta}}));
       }},
      {"indecomposable remainders",
       [](OrdinalSampler& s) {
         Ordinal lam = s.limit();
         const CnfTerm& last = lam.terms().back();
         auto [prefix, unit] = split_last_unit(lam);
         (void)unit;
         Ordinal alpha = add(prefix, s.below_power(last.exponent));
         if (alpha.is_zero()) return Outcome{true, true, {}};
         Ordinal beta = s.below(alpha);
         Ordinal ga = sub_left(lam, alpha), gb = sub_left(lam, beta);
         if (!is_indecomposable(ga)) {
           return check(false, "generator: L - alpha not indecomposable, " + show({{"L", &lam}, {"alpha", &alpha}}));
         }
         if (gb == ga) return Outcome{true, true, {}};
         return check(!is_indecomposable(gb), show({{"L", &lam}, {"alpha", &alpha}, {"beta", &beta}}));
       }},
      {"indecomposability characterization",
       [](OrdinalSampler& s) {
         Ordinal a = s.uniform(0, 1) ? Ordinal::omega_power(s.exponent()) : s.any();
         if (a.is_zero()) return Outcome{true, true, {}};
         Ordinal b = s.below(a), c = s.below(a);
         if (is_indecomposable(a)) return check(add(b, c) < a, show({{"a", &a}, {"b", &b}, {"c", &c}}));
         auto [x, y] = split_last_unit(a);
         return check(x < a && y < a && add(x, y) == a, "no witness for decomposable " + show({{"a", &a}}));
       }},
      {"right strict monotonicity",
       [](OrdinalSampler& s) {
         Ordinal a = s.any(), b = s.any(), c = s.any();
         if (b == c) return Outcome{true, true, {}};
         if (b > c) std::swap(b, c);
         return check(add(a, b) < add(a, c), show({{"a", &a}, {"b", &b}, {"c", &c}}));
       }},
      {"total order",
       [](OrdinalSampler& s) {
         Ordinal a = s.any(), b = s.any(), c = s.any();
         bool antisym = (compare(a, b) == 0) == (compare(b, a) == 0) && (compare(a, b) < 0) == (compare(b, a) > 0);
         bool trans = !(a <= b && b <= c) || a <= c;
         bool eq = (compare(a, b) == 0) == (a.to_string() == b.to_string());
         return check(antisym && trans && eq, show({{"a", &a}, {"b", &b}, {"c", &c}}));
       }},
  };
  return all;
}

}  // namespace

std::vector<LawResult> run_ordinal_laws(std::size_t cases, std::uint64_t seed) {
  std::vector<LawResult> out;
  std::uint64_t law_seed = seed;
  for (const auto& [name, law] : laws()) {
    OrdinalSampler sampler(law_seed++);
    LawResult r{name, 0, 0, 0, {}};
    for (std::size_t i = 0; i < cases; ++i) {
      ++r.cases;
      Outcome o;
      try {
        o = law(sampler);
      } catch (const std::exception& e) {
        o = {false, false, std::string("exception: ") + e.what()};
      }
      if (o.vacuous) ++r.vacuous;
      if (!o.ok) {
        ++r.failures;
        if (r.counterexample.empty()) r.counterexample = o.detail;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace transdim
