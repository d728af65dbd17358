#include "transdim/dim_value.hpp"
#include "transdim/dsl.hpp"
#include "transdim/errors.hpp"

#include <gtest/gtest.h>

using namespace transdim;

namespace {

DimValue o(std::string_view s) { return DimValue::ord(parse_ordinal(s)); }
const DimValue kOmega = DimValue::omega_symbol();
const DimValue kNeg = DimValue::neg_one();

}  // namespace

TEST(DimValue, TotalOrderAcrossTiers) {
  EXPECT_LT(kNeg, DimValue::finite(0));
  EXPECT_LT(o("w_3 + w"), kOmega);
  EXPECT_LT(o("w^2"), o("w_1"));
  EXPECT_EQ(DimValue::parse("Omega"), kOmega);
  EXPECT_EQ(DimValue::parse("-1"), kNeg);
  EXPECT_EQ(DimValue::parse("w+3"), o("w+3"));
  EXPECT_THROW(kOmega.ordinal(), DomainError);
}

TEST(DimValue, BoundArithmetic) {
  EXPECT_EQ(dim_add(kNeg, o("w")), o("w"));
  EXPECT_EQ(dim_add(o("w"), kOmega), kOmega);
  EXPECT_EQ(dim_add(o("w+2"), o("3")), o("w+5"));
  EXPECT_EQ(dim_add(o("w_1"), o("w_2")), kOmega);
  EXPECT_EQ(dim_max(o("w"), o("5")), o("w"));
  EXPECT_EQ(dim_min(kNeg, o("5")), kNeg);
}

TEST(Interval, PrintsAndContains) {
  EXPECT_EQ(Interval::exact(o("w")).to_string(), "[w, w]");
  EXPECT_EQ((Interval{o("w"), o("w_1"), true}).to_string(), "[w, w_1)");
  Interval i{o("3"), o("w"), true};
  EXPECT_TRUE(i.contains(o("17")));
  EXPECT_FALSE(i.contains(o("w")));
  EXPECT_FALSE(i.contains(o("2")));
  EXPECT_TRUE(Interval::vacuous().contains(kOmega));
  EXPECT_TRUE((Interval{o("w"), o("w"), true}).is_empty());
  EXPECT_FALSE(Interval::exact(kNeg).is_empty());
}

TEST(Interval, CanonicalFoldsStrictSuccessors) {
  EXPECT_EQ(canonical({DimValue::finite(0), DimValue::finite(5), true}),
            (Interval{DimValue::finite(0), DimValue::finite(4), false}));
  EXPECT_EQ(canonical({DimValue::finite(0), o("w"), true}), (Interval{DimValue::finite(0), o("w"), true}));
  EXPECT_EQ(canonical({kNeg, DimValue::finite(0), true}), (Interval{kNeg, kNeg, false}));
}

TEST(Interval, MeetIntersects) {
  auto m = meet({o("2"), o("w"), false}, {o("5"), o("w"), true});
  ASSERT_TRUE(m);
  EXPECT_EQ(*m, (Interval{o("5"), o("w"), true}));
  EXPECT_FALSE(meet(Interval::exact(o("2")), Interval::exact(o("3"))));
  EXPECT_FALSE(meet({o("w"), kOmega, false}, Interval::at_most(o("w"), true)));
}

TEST(Interval, MeetIsCommutativeAndTightening) {
  const std::vector<Interval> xs = {
      Interval::vacuous(),           Interval::exact(o("w")),       Interval::at_most(o("w"), true),
      {o("3"), o("w+1"), false},     {o("w"), o("w_1"), true},      {kNeg, o("7"), false},
      {o("w+1"), kOmega, false},     Interval::exact(kNeg),         {o("w_1"), o("w_2"), false},
  };
  for (const auto& a : xs) {
    for (const auto& b : xs) {
      auto ab = meet(a, b), ba = meet(b, a);
      ASSERT_EQ(ab.has_value(), ba.has_value());
      if (!ab) continue;
      EXPECT_EQ(*ab, *ba);
      EXPECT_GE(ab->lower, a.lower);
      EXPECT_TRUE(upper_at_most(ab->upper, ab->upper_strict, a.upper, a.upper_strict));
    }
  }
}

TEST(Interval, MaxOfParts) {
  Interval m = max_of({Interval::exact(o("3")), {o("w"), o("w+5"), false}, Interval::at_most(o("w^2"), true)});
  EXPECT_EQ(m.lower, o("w"));
  EXPECT_EQ(m.upper, o("w^2"));
  EXPECT_TRUE(m.upper_strict);
}
