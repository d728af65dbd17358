#include "transdim/dim_value.hpp"

#include "transdim/dsl.hpp"
#include "transdim/errors.hpp"

namespace transdim {

DimValue DimValue::omega_symbol() {
  DimValue v;
  v.kind_ = Kind::Omega;
  return v;
}

DimValue DimValue::ord(Ordinal value) {
  DimValue v;
  v.kind_ = Kind::Ord;
  v.value_ = std::move(value);
  return v;
}

const Ordinal& DimValue::ordinal() const {
  if (kind_ != Kind::Ord) throw DomainError("dimension value " + to_string() + " is not an ordinal");
  return value_;
}

std::string DimValue::to_string() const {
  switch (kind_) {
    case Kind::NegOne:
      return "-1";
    case Kind::Omega:
      return "Omega";
    case Kind::Ord:
      break;
  }
  return value_.to_string();
}

DimValue DimValue::parse(const std::string& text) {
  if (text == "-1") return neg_one();
  if (text == "Omega") return omega_symbol();
  return ord(parse_ordinal(text));
}

bool operator==(const DimValue& a, const DimValue& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const DimValue& a, const DimValue& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  if (a.kind_ == DimValue::Kind::Ord) return a.value_ <=> b.value_;
  return std::strong_ordering::equal;
}

DimValue dim_add(const DimValue& a, const DimValue& b) {
  if (a.is_omega_symbol() || b.is_omega_symbol()) return DimValue::omega_symbol();
  if (a.is_neg_one()) return b;
  if (b.is_neg_one()) return a;
  try {
    return DimValue::ord(add(a.ordinal(), b.ordinal()));
  } catch (const UnsupportedArithmetic&) {
    return DimValue::omega_symbol();
  }
}

const DimValue& dim_max(const DimValue& a, const DimValue& b) { return a < b ? b : a; }
const DimValue& dim_min(const DimValue& a, const DimValue& b) { return b < a ? b : a; }

bool Interval::is_empty() const { return upper_strict ? !(lower < upper) : upper < lower; }

bool Interval::contains(const DimValue& v) const {
  if (v < lower) return false;
  return upper_strict ? v < upper : v <= upper;
}

std::string Interval::to_string() const {
  return "[" + lower.to_string() + ", " + upper.to_string() + (upper_strict ? ")" : "]");
}

Interval canonical(Interval i) {
  if (!i.upper_strict || !i.upper.is_ordinal()) return i;
  const Ordinal& u = i.upper.ordinal();
  if (u.is_zero()) {
    i.upper = DimValue::neg_one();
    i.upper_strict = false;
  } else if (u.is_successor()) {
    Decomposition dec = decompose(u);
    i.upper = DimValue::ord(add(dec.limit_part, Ordinal::finite(dec.finite_part - 1)));
    i.upper_strict = false;
  }
  return i;
}

bool upper_at_most(const DimValue& a, bool a_strict, const DimValue& b, bool b_strict) {
  if (a < b) return true;
  if (b < a) return false;
  return a_strict || !b_strict;
}

std::optional<Interval> meet(const Interval& a, const Interval& b) {
  Interval out;
  out.lower = dim_max(a.lower, b.lower);
  if (upper_at_most(a.upper, a.upper_strict, b.upper, b.upper_strict)) {
    out.upper = a.upper;
    out.upper_strict = a.upper_strict;
  } else {
    out.upper = b.upper;
    out.upper_strict = b.upper_strict;
  }
  out = canonical(out);
  if (out.is_empty()) return std::nullopt;
  return out;
}

Interval max_of(const std::vector<Interval>& parts) {
  if (parts.empty()) throw DomainError("max_of needs at least one interval");
  Interval out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const Interval& p = parts[i];
    out.lower = dim_max(out.lower, p.lower);
    if (!upper_at_most(p.upper, p.upper_strict, out.upper, out.upper_strict)) {
      out.upper = p.upper;
      out.upper_strict = p.upper_strict;
    }
  }
  return canonical(out);
}

}  // namespace transdim
