#pragma once

// Seeded randomized checks of the ordinal identities the dimension rules
// rely on. Used by `check-ordinals` and by the acceptance suite.

#include "transdim/ordinal.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace transdim {

// Random Small ordinals in CNF. Exponents stay below w^5 (so they are
// themselves CNF with finite exponents 0..4) and coefficients lie in 1..9.
class OrdinalSampler {
 public:
  explicit OrdinalSampler(std::uint64_t seed) : rng_(seed) {}

  Ordinal any();
  Ordinal limit();  // nonzero limit ordinal
  // Uniform-ish sample from [0, a); a must be nonzero.
  Ordinal below(const Ordinal& a);
  // Sample from [0, w^e).
  Ordinal below_power(const Ordinal& e);
  Ordinal exponent();

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
  }

 private:
  Ordinal from_exponents(std::vector<Ordinal> exps);

  std::mt19937_64 rng_;
};

struct LawResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t vacuous = 0;  // cases whose hypothesis did not hold
  std::size_t failures = 0;
  std::string counterexample;  // first failure, empty when none
};

// Runs every law `cases` times with generators seeded from `seed`.
std::vector<LawResult> run_ordinal_laws(std::size_t cases, std::uint64_t seed);

}  // namespace transdim
