#include "transdim/ordinal.hpp"

#include "transdim/errors.hpp"

#include <algorithm>
#include <sstream>

namespace transdim {
namespace {

std::uint64_t checked_sum(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw UnsupportedArithmetic("ordinal coefficient overflow");
  }
  return out;
}

// Adds two Small term lists.
std::vector<CnfTerm> add_small(std::span<const CnfTerm> a, std::span<const CnfTerm> b) {
  if (b.empty()) return {a.begin(), a.end()};
  const Ordinal& lead = b.front().exponent;
  std::vector<CnfTerm> out;
  out.reserve(a.size() + b.size());
  for (const CnfTerm& t : a) {
    auto c = t.exponent <=> lead;
    if (c == std::strong_ordering::greater) {
      out.push_back(t);
    } else {
      if (c == std::strong_ordering::equal) {
        out.push_back({lead, checked_sum(t.coefficient, b.front().coefficient)});
        out.insert(out.end(), b.begin() + 1, b.end());
        return out;
      }
      break;
    }
  }
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::strong_ordering compare_terms(std::span<const CnfTerm> a, std::span<const CnfTerm> b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a[i].exponent <=> b[i].exponent; c != 0) return c;
    if (auto c = a[i].coefficient <=> b[i].coefficient; c != 0) return c;
  }
  return a.size() <=> b.size();
}

void write_small(std::ostream& os, std::span<const CnfTerm> terms) {
  bool first = true;
  for (const CnfTerm& t : terms) {
    if (!first) os << " + ";
    first = false;
    auto e = t.exponent.as_finite();
    if (e && *e == 0) {
      os << t.coefficient;
      continue;
    }
    os << 'w';
    if (e && *e == 1) {
      // plain w
    } else if (e) {
      os << '^' << *e;
    } else if (t.exponent == Ordinal::omega()) {
      os << "^w";
    } else {
      os << "^(" << t.exponent.to_string() << ')';
    }
    if (t.coefficient != 1) os << '*' << t.coefficient;
  }
}

Ordinal from_small_terms(std::vector<CnfTerm> terms) {
  return normalize_terms(std::move(terms));
}

}  // namespace

Ordinal::Ordinal() = default;

Ordinal Ordinal::finite(std::uint64_t n) {
  Ordinal o;
  if (n > 0) o.terms_.push_back({Ordinal(), n});
  return o;
}

Ordinal Ordinal::omega() { return omega_power(finite(1)); }

Ordinal Ordinal::omega_power(const Ordinal& exponent, std::uint64_t coefficient) {
  if (coefficient == 0) throw ValidationError("CNF coefficient must be >= 1");
  if (!exponent.is_small()) {
    // w^(w_t) = w_t for initial ordinals; w^(w_t + d) is outside both tiers.
    if (exponent.tail().is_zero() && coefficient == 1) {
      return initial_plus(*exponent.initial_index(), Ordinal());
    }
    throw UnsupportedArithmetic("exponent beyond the initial-ordinal tier");
  }
  Ordinal o;
  o.terms_.push_back({exponent, coefficient});
  return o;
}

Ordinal Ordinal::initial_plus(const Ordinal& index, const Ordinal& tail) {
  if (!index.is_small() || !tail.is_small()) {
    throw UnsupportedArithmetic("initial-ordinal index and tail must be Small");
  }
  if (index.is_zero()) throw DomainError("initial ordinal index must be >= 1");
  Ordinal o;
  o.index_ = std::make_shared<const Ordinal>(index);
  o.terms_ = tail.terms_;
  return o;
}

bool Ordinal::is_zero() const { return is_small() && terms_.empty(); }

bool Ordinal::is_finite() const {
  return is_small() && (terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero()));
}

bool Ordinal::is_successor() const {
  return !terms_.empty() && terms_.back().exponent.is_zero();
}

bool Ordinal::is_limit() const { return !is_zero() && !is_successor(); }

std::optional<std::uint64_t> Ordinal::as_finite() const {
  if (!is_finite()) return std::nullopt;
  return terms_.empty() ? 0 : terms_[0].coefficient;
}

Ordinal Ordinal::tail() const {
  Ordinal o;
  o.terms_ = terms_;
  return o;
}

std::string Ordinal::to_string() const {
  std::ostringstream os;
  if (!is_small()) {
    os << "w_";
    auto k = index_->as_finite();
    if (k) {
      os << *k;
    } else {
      os << '(' << index_->to_string() << ')';
    }
    if (!terms_.empty()) {
      os << " + ";
      write_small(os, terms_);
    }
    return os.str();
  }
  if (terms_.empty()) return "0";
  write_small(os, terms_);
  return os.str();
}

bool operator==(const Ordinal& a, const Ordinal& b) {
  return compare(a, b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) { return compare(a, b); }

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) {
  if (a.is_small() != b.is_small()) {
    return a.is_small() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (!a.is_small()) {
    if (auto c = compare(*a.initial_index(), *b.initial_index()); c != 0) return c;
  }
  return compare_terms(a.terms(), b.terms());
}

Ordinal normalize_terms(std::vector<CnfTerm> terms) {
  Ordinal acc;
  for (CnfTerm& t : terms) {
    if (t.coefficient == 0) throw ValidationError("CNF coefficient must be >= 1");
    if (!t.exponent.is_small()) {
      acc = add(acc, Ordinal::omega_power(t.exponent, t.coefficient));
      continue;
    }
    Ordinal piece;
    piece.terms_.push_back(std::move(t));
    acc = add(acc, piece);
  }
  return acc;
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (!b.is_small()) {
    if (!a.is_small()) {
      throw UnsupportedArithmetic("sum of two initial-ordinal values is not represented");
    }
    return b;  // a < w_t absorbs into w_t
  }
  Ordinal out;
  out.index_ = a.index_;
  out.terms_ = add_small(a.terms_, b.terms_);
  return out;
}

Ordinal sub_left(const Ordinal& a, const Ordinal& b) {
  if (b > a) throw DomainError("sub_left: subtrahend " + b.to_string() + " exceeds " + a.to_string());
  if (!a.is_small()) {
    if (b.is_small()) return a;
    if (*b.initial_index() < *a.initial_index()) return a;
    // Same initial index: subtract the tails.
    return sub_left(a.tail(), b.tail());
  }
  std::span<const CnfTerm> at = a.terms();
  std::span<const CnfTerm> bt = b.terms();
  std::size_t i = 0;
  while (i < at.size() && i < bt.size() && at[i] == bt[i]) ++i;
  std::vector<CnfTerm> rest;
  if (i < bt.size() && at[i].exponent == bt[i].exponent) {
    rest.push_back({at[i].exponent, at[i].coefficient - bt[i].coefficient});
    ++i;
  }
  rest.insert(rest.end(), at.begin() + static_cast<std::ptrdiff_t>(i), at.end());
  return from_small_terms(std::move(rest));
}

Ordinal successor(const Ordinal& a) { return add(a, Ordinal::finite(1)); }

Decomposition decompose(const Ordinal& a) {
  if (!a.is_successor()) return {a, 0};
  std::uint64_t n = a.terms().back().coefficient;
  std::vector<CnfTerm> head(a.terms().begin(), a.terms().end() - 1);
  Ordinal limit = from_small_terms(std::move(head));
  if (!a.is_small()) limit = Ordinal::initial_plus(*a.initial_index(), limit);
  return {limit, n};
}

bool is_indecomposable(const Ordinal& a) {
  if (a.is_zero()) throw DomainError("0 is not additively indecomposable");
  if (!a.is_small()) return a.terms().empty();
  return a.terms().size() == 1 && a.terms()[0].coefficient == 1;
}

Ordinal initial_ordinal(const Ordinal& index) {
  if (index.is_zero()) throw DomainError("initial_ordinal requires index >= 1; w_0 is w");
  return Ordinal::initial_plus(index, Ordinal());
}

Ordinal least_initial_index_above(const Ordinal& a) {
  if (a.is_small()) return Ordinal::finite(1);
  return successor(*a.initial_index());
}

std::string Aleph::to_string() const { return "aleph(" + index_.to_string() + ")"; }

}  // namespace transdim
