#pragma once

// Exact ordinal arithmetic in Cantor normal form.
//
// Two tiers are represented:
//   Small        w^e1*c1 + ... + w^ek*ck with e1 > ... > ek Small ordinals
//                (everything below epsilon_0),
//   InitialPlus  w_t + d with t >= 1 a Small ordinal and d a Small ordinal.
//
// Values are immutable; every operation is a pure function.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace transdim {

struct CnfTerm;

class Ordinal {
 public:
  Ordinal();  // zero

  static Ordinal finite(std::uint64_t n);
  static Ordinal omega();
  // w^exponent * coefficient; coefficient must be >= 1.
  static Ordinal omega_power(const Ordinal& exponent, std::uint64_t coefficient = 1);
  // w_index + tail. index must be a Small ordinal >= 1, tail a Small ordinal.
  static Ordinal initial_plus(const Ordinal& index, const Ordinal& tail);

  bool is_small() const { return index_ == nullptr; }
  bool is_zero() const;
  bool is_finite() const;
  bool is_limit() const;  // nonzero with no finite term
  bool is_successor() const;
  std::optional<std::uint64_t> as_finite() const;

  // CNF terms of the Small part; for InitialPlus this is the tail.
  std::span<const CnfTerm> terms() const { return terms_; }
  // Index t of w_t, or nullptr when Small.
  const Ordinal* initial_index() const { return index_.get(); }
  Ordinal tail() const;

  std::string to_string() const;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  friend Ordinal add(const Ordinal& a, const Ordinal& b);
  friend Ordinal sub_left(const Ordinal& a, const Ordinal& b);
  friend Ordinal normalize_terms(std::vector<CnfTerm> terms);

  std::shared_ptr<const Ordinal> index_;
  std::vector<CnfTerm> terms_;
};

struct CnfTerm {
  Ordinal exponent;
  std::uint64_t coefficient = 1;

  friend bool operator==(const CnfTerm&, const CnfTerm&) = default;
};

struct Decomposition {
  Ordinal limit_part;
  std::uint64_t finite_part = 0;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Reads the sequence as the formal ordinal sum w^e1*c1 + w^e2*c2 + ...
// evaluated left to right. Throws ValidationError on a zero coefficient.
Ordinal normalize_terms(std::vector<CnfTerm> terms);

// Ordinal sum a + b. Throws UnsupportedArithmetic for InitialPlus + InitialPlus.
Ordinal add(const Ordinal& a, const Ordinal& b);

// The unique g with b + g = a. Throws DomainError when b > a.
Ordinal sub_left(const Ordinal& a, const Ordinal& b);

std::strong_ordering compare(const Ordinal& a, const Ordinal& b);

Ordinal successor(const Ordinal& a);

// a = limit_part + finite_part, limit_part the largest limit ordinal <= a
// (0 when a is finite).
Decomposition decompose(const Ordinal& a);

// Membership in H, the additively indecomposable ordinals w^d.
// Throws DomainError for 0.
bool is_indecomposable(const Ordinal& a);

// w_index for index >= 1. Throws DomainError for 0 and UnsupportedArithmetic
// when index is not Small.
Ordinal initial_ordinal(const Ordinal& index);

// Least t >= 1 with a < w_t.
Ordinal least_initial_index_above(const Ordinal& a);

class Aleph {
 public:
  explicit Aleph(Ordinal index = Ordinal()) : index_(std::move(index)) {}

  const Ordinal& index() const { return index_; }
  Aleph successor() const { return Aleph(transdim::successor(index_)); }
  std::string to_string() const;

  friend bool operator==(const Aleph&, const Aleph&) = default;
  friend std::strong_ordering operator<=>(const Aleph& a, const Aleph& b) {
    return a.index_ <=> b.index_;
  }

 private:
  Ordinal index_;
};

inline Aleph aleph(Ordinal index) { return Aleph(std::move(index)); }

}  // namespace transdim
