#pragma once

// Reference ordinal arithmetic below w^K, independent of the library.
//
// An ordinal is its coefficient array c[0..K-1] (c[i] the coefficient of
// w^i). Addition is computed from the recursive definition alone:
//   a + 0 = a,  a + (b+1) = (a+b) + 1,  a + b = sup_n (a + b[n]) for limit b,
// with the fundamental sequence (P + w^j)[n] = P + w^(j-1)*n.

#include "transdim/ordinal.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <utility>

namespace oracle {

inline constexpr std::size_t K = 4;
using Ord = std::array<std::uint64_t, K>;

inline bool is_zero(const Ord& a) {
  for (auto c : a)
    if (c) return false;
  return true;
}

inline int cmp(const Ord& a, const Ord& b) {
  for (std::size_t i = K; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

class Adder {
 public:
  Ord add(const Ord& a, const Ord& b) {
    if (is_zero(b)) return a;
    auto key = std::make_pair(a, b);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Ord out;
    if (b[0] > 0) {
      Ord p = b;
      --p[0];
      out = add(a, p);
      ++out[0];
    } else {
      const Ord x1 = add(a, fundamental(b, 1));
      const Ord x2 = add(a, fundamental(b, 2));
      std::size_t d = K;
      for (std::size_t i = K; i-- > 0;) {
        if (x1[i] != x2[i]) {
          d = i;
          break;
        }
      }
      // x_n grows only at position d, so the supremum carries into d + 1.
      out = x1;
      for (std::size_t i = 0; i <= d; ++i) out[i] = 0;
      ++out[d + 1];
    }
    memo_.emplace(key, out);
    return out;
  }

  static Ord fundamental(const Ord& b, std::uint64_t n) {
    std::size_t j = 1;
    while (b[j] == 0) ++j;
    Ord p = b;
    --p[j];
    p[j - 1] += n;
    return p;
  }

 private:
  std::map<std::pair<Ord, Ord>, Ord> memo_;
};

inline transdim::Ordinal to_ordinal(const Ord& a) {
  transdim::Ordinal out;
  for (std::size_t i = K; i-- > 0;) {
    if (a[i]) out = transdim::add(out, transdim::Ordinal::omega_power(transdim::Ordinal::finite(i), a[i]));
  }
  return out;
}

// Inverse of to_ordinal for Small ordinals below w^K.
inline Ord from_ordinal(const transdim::Ordinal& o) {
  Ord a{};
  for (const auto& t : o.terms()) a[*t.exponent.as_finite()] = t.coefficient;
  return a;
}

// Every array with coefficients 0..max_coeff in positions 0..top.
inline std::vector<Ord> domain(std::size_t top, std::uint64_t max_coeff) {
  std::vector<Ord> out{Ord{}};
  for (std::size_t i = 0; i <= top; ++i) {
    std::vector<Ord> next;
    for (const Ord& a : out) {
      for (std::uint64_t c = 0; c <= max_coeff; ++c) {
        Ord b = a;
        b[i] = c;
        next.push_back(b);
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace oracle
