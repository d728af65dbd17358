#include "ordinal_oracle.hpp"

#include "transdim/dsl.hpp"
#include "transdim/errors.hpp"
#include "transdim/ordinal.hpp"
#include "transdim/ordinal_laws.hpp"

#include <gtest/gtest.h>

using namespace transdim;

namespace {

Ordinal ord(std::string_view s) { return parse_ordinal(s); }

}  // namespace

TEST(Ordinal, PrintsCanonicalForms) {
  EXPECT_EQ(Ordinal().to_string(), "0");
  EXPECT_EQ(Ordinal::finite(7).to_string(), "7");
  EXPECT_EQ(Ordinal::omega().to_string(), "w");
  EXPECT_EQ(ord("w^2*3 + w + 4").to_string(), "w^2*3 + w + 4");
  EXPECT_EQ(ord("w^w").to_string(), "w^w");
  EXPECT_EQ(ord("w_1 + w").to_string(), "w_1 + w");
  EXPECT_EQ(ord("w_0").to_string(), "w");
}

TEST(Ordinal, AdditionExamples) {
  // Frozen from the recursive oracle below.
  EXPECT_EQ(add(ord("w+2"), ord("w*2+1")), ord("w*3+1"));
  EXPECT_EQ(add(Ordinal::finite(3), Ordinal::omega()), Ordinal::omega());
  EXPECT_EQ(add(ord("w"), ord("w^2")), ord("w^2"));
  EXPECT_EQ(add(ord("w^2+w"), ord("w^2")), ord("w^2*2"));
  EXPECT_EQ(add(ord("w_1"), ord("w+1")), ord("w_1+w+1"));
  EXPECT_EQ(add(ord("w^3"), ord("w_1")), ord("w_1"));
  EXPECT_THROW(add(ord("w_1"), ord("w_1")), UnsupportedArithmetic);
}

TEST(Ordinal, OracleAgreesOnFrozenExamples) {
  oracle::Adder o;
  EXPECT_EQ(o.add({2, 1}, {1, 2}), (oracle::Ord{1, 3}));
  EXPECT_EQ(o.add({3}, {0, 1}), (oracle::Ord{0, 1}));
  EXPECT_EQ(o.add({0, 1, 1}, {0, 0, 1}), (oracle::Ord{0, 0, 2}));
  EXPECT_EQ(o.add({0, 1}, {3, 0, 0, 1}), (oracle::Ord{3, 0, 0, 1}));
}

TEST(Ordinal, AdditionMatchesRecursiveOracle) {
  oracle::Adder o;
  const auto dom = oracle::domain(2, 3);
  for (const auto& a : dom) {
    for (const auto& b : dom) {
      const auto expect = o.add(a, b);
      ASSERT_EQ(add(oracle::to_ordinal(a), oracle::to_ordinal(b)), oracle::to_ordinal(expect))
          << oracle::to_ordinal(a).to_string() << " + " << oracle::to_ordinal(b).to_string();
    }
  }
}

TEST(Ordinal, CompareMatchesOracleOrder) {
  const auto dom = oracle::domain(2, 3);
  for (const auto& a : dom) {
    for (const auto& b : dom) {
      const int want = oracle::cmp(a, b);
      const auto got = compare(oracle::to_ordinal(a), oracle::to_ordinal(b));
      ASSERT_EQ(want < 0, got < 0);
      ASSERT_EQ(want == 0, got == 0);
    }
  }
}

TEST(Ordinal, LeftSubtractionInvertsOracleAddition) {
  oracle::Adder o;
  const auto dom = oracle::domain(2, 3);
  for (const auto& a : dom) {
    for (const auto& b : dom) {
      const Ordinal A = oracle::to_ordinal(a), B = oracle::to_ordinal(b);
      if (B > A) {
        EXPECT_THROW(sub_left(A, B), DomainError);
        continue;
      }
      const Ordinal g = sub_left(A, B);
      ASSERT_EQ(o.add(b, oracle::from_ordinal(g)), a) << A.to_string() << " - " << B.to_string();
    }
  }
  EXPECT_EQ(sub_left(ord("w*2+3"), ord("w")), ord("w+3"));
  EXPECT_EQ(sub_left(ord("w^2"), ord("w*5+1")), ord("w^2"));
}

TEST(Ordinal, IndecomposabilityMatchesBruteForce) {
  oracle::Adder o;
  const auto dom = oracle::domain(2, 3);
  for (const auto& a : dom) {
    if (oracle::is_zero(a)) continue;
    bool splits = false;
    for (const auto& b : dom) {
      if (oracle::cmp(b, a) >= 0) continue;
      for (const auto& c : dom) {
        if (oracle::cmp(c, a) < 0 && o.add(b, c) == a) splits = true;
      }
    }
    EXPECT_EQ(is_indecomposable(oracle::to_ordinal(a)), !splits) << oracle::to_ordinal(a).to_string();
  }
  EXPECT_THROW(is_indecomposable(Ordinal()), DomainError);
  EXPECT_TRUE(is_indecomposable(ord("w_1")));
  EXPECT_FALSE(is_indecomposable(ord("w_1 + 1")));
}

TEST(Ordinal, DecompositionSplitsLimitAndFinitePart) {
  EXPECT_EQ(decompose(ord("w^2+w*2+3")), (Decomposition{ord("w^2+w*2"), 3}));
  EXPECT_EQ(decompose(Ordinal::finite(5)), (Decomposition{Ordinal(), 5}));
  EXPECT_EQ(decompose(ord("w_1+w+2")), (Decomposition{ord("w_1+w"), 2}));
  EXPECT_EQ(decompose(ord("w_2")), (Decomposition{ord("w_2"), 0}));
}

TEST(Ordinal, NormalizeFoldsLeftToRight) {
  EXPECT_EQ(normalize_terms({{Ordinal::finite(1), 1}, {Ordinal::finite(1), 2}}), ord("w*3"));
  EXPECT_EQ(normalize_terms({{Ordinal::finite(0), 4}, {Ordinal::finite(1), 1}}), ord("w"));
  EXPECT_THROW(normalize_terms({{Ordinal::finite(1), 0}}), ValidationError);
}

TEST(Ordinal, ClassifiesSuccessorsAndLimits) {
  EXPECT_TRUE(Ordinal().is_zero());
  EXPECT_FALSE(Ordinal().is_limit());
  EXPECT_TRUE(ord("w+1").is_successor());
  EXPECT_TRUE(ord("w^2*2").is_limit());
  EXPECT_TRUE(ord("w_1").is_limit());
  EXPECT_EQ(successor(ord("w_1+w")), ord("w_1+w+1"));
}

TEST(Ordinal, InitialOrdinals) {
  EXPECT_EQ(initial_ordinal(Ordinal::finite(1)), ord("w_1"));
  EXPECT_THROW(initial_ordinal(Ordinal()), DomainError);
  EXPECT_EQ(least_initial_index_above(ord("w^w")), Ordinal::finite(1));
  EXPECT_EQ(least_initial_index_above(ord("w_1+w")), Ordinal::finite(2));
  EXPECT_EQ(least_initial_index_above(ord("w_(w)")), ord("w+1"));
  EXPECT_LT(ord("w^(w^w)"), ord("w_1"));
  EXPECT_LT(ord("w_1+w^3"), ord("w_2"));
  EXPECT_EQ(Aleph(Ordinal::finite(1)).successor(), Aleph(Ordinal::finite(2)));
}

TEST(Ordinal, LawSuiteHasNoFailures) {
  for (const LawResult& r : run_ordinal_laws(2000, 7)) {
    EXPECT_EQ(r.failures, 0u) << r.name << ": " << r.counterexample;
    EXPECT_EQ(r.cases, 2000u);
    EXPECT_LT(r.vacuous, r.cases) << r.name;
  }
}

TEST(Ordinal, SamplerStaysInRange) {
  OrdinalSampler s(3);
  const Ordinal bound = ord("w^(w^5)");
  for (int i = 0; i < 2000; ++i) {
    const Ordinal a = s.any();
    ASSERT_LT(a, bound);
    for (const auto& t : a.terms()) ASSERT_LE(t.coefficient, 9u);
    if (!a.is_zero()) ASSERT_LT(s.below(a), a);
    ASSERT_TRUE(s.limit().is_limit());
  }
}

TEST(Ordinal, SamplerIsSeedDeterministic) {
  OrdinalSampler a(11), b(11);
  for (int i = 0; i < 100; ++i) ASSERT_EQ(a.any(), b.any());
}
