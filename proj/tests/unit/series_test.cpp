#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "mjc/errors.hpp"
#include "mjc/series.hpp"

using namespace mjc;

namespace {

VariableProfile xy(int ox, int oy) { return VariableProfile({"x", "y"}, {ox, oy}); }

TruncatedSeries random_series(const VariableProfile& p, std::mt19937& rng, int terms, bool unit_constant) {
  TruncatedSeries s(p);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int t = 0; t < terms; ++t) {
    Exponents e(p.arity());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::uniform_int_distribution<int>(0, p.order(i))(rng);
    s.add_term(e, c(rng));
  }
  if (unit_constant) {
    const Exponents zero(p.arity(), 0);
    s.add_term(zero, BigInt(1) - s.coefficient(zero));
  }
  return s;
}

}  // namespace

TEST(Profile, PackUnpackRoundTrip) {
  VariableProfile p({"x", "z1", "z2"}, {4, 2, 3});
  EXPECT_EQ(p.box_size(), 5u * 3u * 4u);
  std::uint64_t prev = 0;
  bool first = true;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 3; ++c) {
        const Exponents e{a, b, c};
        const auto key = p.pack(e);
        EXPECT_EQ(p.unpack(key), e);
        if (!first) EXPECT_GT(key, prev);  // lexicographic
        prev = key;
        first = false;
      }
  EXPECT_FALSE(p.in_box(Exponents{5, 0, 0}));
  EXPECT_EQ(p.index_of("z2"), 2u);
  EXPECT_THROW(p.index_of("w"), InvalidArgument);
}

TEST(Profile, RejectsBadShapes) {
  EXPECT_THROW(VariableProfile({"x"}, {1, 2}), InvalidArgument);
  EXPECT_THROW(VariableProfile({}, {}), InvalidArgument);
  EXPECT_THROW(VariableProfile({"x", "x"}, {1, 1}), InvalidArgument);
  EXPECT_THROW(VariableProfile({"x"}, {-1}), InvalidArgument);
}

TEST(Profile, Juggling) {
  const auto p = VariableProfile::juggling(6, 2, 3);
  ASSERT_EQ(p.arity(), 4u);
  EXPECT_EQ(p.name(0), "x");
  EXPECT_EQ(p.name(3), "z3");
  EXPECT_EQ(p.order(0), 6);
  EXPECT_EQ(p.order(2), 2);
}

TEST(Series, TruncationDropsOutOfBox) {
  auto p = xy(2, 2);
  auto x = TruncatedSeries::variable(p, "x");
  auto s = x * x * x;
  EXPECT_TRUE(s.is_zero());
  EXPECT_THROW(s.coefficient({3, 0}), InvalidArgument);
  TruncatedSeries t(p);
  t.add_term({3, 0}, 5);
  EXPECT_TRUE(t.is_zero());
}

TEST(Series, ZeroCoefficientsNotStored) {
  auto p = xy(3, 3);
  auto x = TruncatedSeries::variable(p, "x");
  auto s = x - x;
  EXPECT_TRUE(s.is_zero());
  EXPECT_EQ(s.term_count(), 0u);
}

TEST(Series, BinomialSquare) {
  auto p = xy(4, 4);
  auto one = TruncatedSeries::constant(p, 1);
  auto x = TruncatedSeries::variable(p, "x");
  auto y = TruncatedSeries::variable(p, "y");
  auto s = (one + x + y) * (one + x + y);
  EXPECT_EQ(s.coefficient({1, 1}), 2);
  EXPECT_EQ(s.coefficient({2, 0}), 1);
  EXPECT_EQ(s.coefficient({0, 0}), 1);
  EXPECT_EQ(s.term_count(), 6u);
}

TEST(Series, ProfileMismatch) {
  auto a = TruncatedSeries::constant(xy(2, 2), 1);
  auto b = TruncatedSeries::constant(xy(2, 3), 1);
  EXPECT_THROW(a + b, ProfileMismatch);
  EXPECT_THROW(a * b, ProfileMismatch);
}

TEST(Series, InverseOfGeometric) {
  auto p = VariableProfile({"x"}, {10});
  auto one = TruncatedSeries::constant(p, 1);
  auto x = TruncatedSeries::variable(p, "x");
  auto inv = invert(one - x - x * x);
  // Fibonacci numbers.
  const auto fib = testing_util::xs({1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89});
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(inv.coefficient({n}), fib[static_cast<std::size_t>(n)]);
  EXPECT_THROW(invert(one + one), InvalidArgument);
  EXPECT_EQ(invert(-one), -one);
}

TEST(Series, InverseProperty) {
  std::mt19937 rng(7);
  VariableProfile p({"x", "z1", "z2"}, {5, 3, 2});
  const auto one = TruncatedSeries::constant(p, 1);
  for (int trial = 0; trial < 25; ++trial) {
    auto a = random_series(p, rng, 15, true);
    EXPECT_EQ(a * invert(a), one);
    EXPECT_EQ(invert(invert(a)), a);
  }
}

TEST(Series, RingLaws) {
  std::mt19937 rng(11);
  VariableProfile p({"x", "z1"}, {4, 3});
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_series(p, rng, 8, false);
    auto b = random_series(p, rng, 8, false);
    auto c = random_series(p, rng, 8, false);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, TruncatedSeries(p));
  }
}

TEST(Series, ExtractTop) {
  auto p = VariableProfile::juggling(3, 2, 2);
  TruncatedSeries s(p);
  s.add_term({0, 2, 2}, 5);
  s.add_term({3, 2, 2}, -1);
  s.add_term({1, 2, 1}, 9);
  EXPECT_EQ(extract_z_top(s, 2), testing_util::xs({5, 0, 0, -1}));
  EXPECT_THROW(extract_z_top(s, 3), InvalidArgument);
  TruncatedSeries no_x(VariableProfile({"z1"}, {2}));
  EXPECT_THROW(extract_z_top(no_x, 1), InvalidArgument);
}

TEST(Series, RemapSwapsExponents) {
  VariableProfile p({"x", "z1", "z2"}, {3, 2, 2});
  auto s = TruncatedSeries::monomial(p, {1, 2, 0}, 4);
  const std::vector<std::size_t> swap{0, 2, 1};
  auto r = remap_variables(s, swap);
  EXPECT_EQ(r.coefficient({1, 0, 2}), 4);
  EXPECT_EQ(remap_variables(r, swap), s);
  const std::vector<std::size_t> bad{1, 0, 2};
  EXPECT_THROW(remap_variables(s, bad), InvalidArgument);
  const std::vector<std::size_t> not_perm{0, 1, 1};
  EXPECT_THROW(remap_variables(s, not_perm), InvalidArgument);
}

TEST(Series, ScaleVariable) {
  VariableProfile p({"z1", "z2"}, {3, 3});
  auto s = TruncatedSeries::monomial(p, {0, 2}, 3) + TruncatedSeries::monomial(p, {1, 3}, 1);
  auto r = scale_variable(s, 1, 0);
  EXPECT_EQ(r.coefficient({2, 2}), 3);
  EXPECT_EQ(r.term_count(), 1u);  // z1^4 z2^3 leaves the box
}

TEST(Series, BoxBudget) {
  Budget b;
  b.max_monomials = 100;
  EXPECT_THROW(check_box_budget(VariableProfile({"x", "y"}, {10, 10}), b), BudgetExceeded);
  EXPECT_NO_THROW(check_box_budget(VariableProfile({"x", "y"}, {8, 8}), b));
}

TEST(Series, JsonShape) {
  auto p = xy(1, 1);
  auto s = TruncatedSeries::monomial(p, {1, 0}, BigInt("123456789012345678901234567890"));
  const auto j = s.to_json();
  EXPECT_EQ(j["vars"], (nlohmann::json{"x", "y"}));
  EXPECT_EQ(j["trunc"], (nlohmann::json{1, 1}));
  ASSERT_EQ(j["terms"].size(), 1u);
  EXPECT_EQ(j["terms"][0]["c"], "123456789012345678901234567890");
  EXPECT_EQ(j["terms"][0]["e"], (nlohmann::json{1, 0}));
}
