#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "mjc/compositions.hpp"
#include "mjc/errors.hpp"
#include "mjc/qcalc.hpp"

using namespace mjc;

namespace {

std::vector<std::string> zs(int m) {
  std::vector<std::string> v;
  for (int i = 1; i <= m; ++i) v.push_back("z" + std::to_string(i));
  return v;
}

// h_n(1, z1..zj) coefficient of z^e is 1 when |e| <= n, else 0.
TruncatedSeries oracle_h(const VariableProfile& p, int n, int j) {
  TruncatedSeries out(p);
  Exponents e(p.arity(), 0);
  std::function<void(int, int)> fill = [&](int var, int used) {
    if (var == j) {
      out.add_term(e, 1);
      return;
    }
    for (int d = 0; used + d <= n; ++d) {
      e[static_cast<std::size_t>(var)] = d;
      fill(var + 1, used + d);
    }
    e[static_cast<std::size_t>(var)] = 0;
  };
  fill(0, 0);
  return out;
}

}  // namespace

TEST(Homogeneous, MatchesMonomialCount) {
  for (int m = 1; m <= 4; ++m) {
    VariableProfile p(zs(m), std::vector<int>(static_cast<std::size_t>(m), 6));
    const auto names = zs(m);
    for (int n = 0; n <= 6; ++n) EXPECT_EQ(homogeneous_in(p, n, names), oracle_h(p, n, m)) << m << " " << n;
  }
}

TEST(DOperator, MonomialAction) {
  VariableProfile p(zs(2), {6, 6});
  // D_{z1,z2} z2^3 = (1 + z1 + z1^2 + z1^3) z2^3
  auto r = apply_D(2, TruncatedSeries::monomial(p, {0, 3}));
  for (int a = 0; a <= 3; ++a) EXPECT_EQ(r.coefficient({a, 3}), 1);
  EXPECT_EQ(r.term_count(), 4u);
  // Constants are fixed.
  EXPECT_EQ(apply_D(2, TruncatedSeries::constant(p, 5)), TruncatedSeries::constant(p, 5));
}

TEST(DOperator, LinearAndCached) {
  std::mt19937 rng(3);
  VariableProfile p({"x", "z1", "z2", "z3"}, {2, 3, 3, 3});
  DOperator d(p, 3);
  for (int t = 0; t < 10; ++t) {
    TruncatedSeries a(p), b(p);
    for (int i = 0; i < 6; ++i) {
      Exponents e{std::uniform_int_distribution<int>(0, 2)(rng), std::uniform_int_distribution<int>(0, 3)(rng),
                  std::uniform_int_distribution<int>(0, 3)(rng), std::uniform_int_distribution<int>(0, 3)(rng)};
      a.add_term(e, std::uniform_int_distribution<int>(-3, 3)(rng));
      b.add_term(e, std::uniform_int_distribution<int>(-3, 3)(rng));
    }
    EXPECT_EQ(d(a + b), d(a) + d(b));
    EXPECT_EQ(d(a * BigInt(3)), d(a) * BigInt(3));
    EXPECT_EQ(d(a), apply_D(3, a));
  }
}

TEST(DOperator, Errors) {
  VariableProfile p(zs(2), {3, 3});
  EXPECT_THROW(apply_D(1, TruncatedSeries(p)), InvalidArgument);
  EXPECT_THROW(apply_D(3, TruncatedSeries(p)), InvalidArgument);
  DOperator d(p, 2);
  EXPECT_THROW(d(TruncatedSeries(VariableProfile(zs(2), {3, 4}))), ProfileMismatch);
}

TEST(DOperator, ReindexedMatchesDirectWhenCanonical) {
  VariableProfile p(zs(3), {3, 3, 3});
  auto a = TruncatedSeries::monomial(p, {1, 0, 2}, 2) + TruncatedSeries::monomial(p, {0, 3, 1}, -1);
  const auto names = zs(3);
  EXPECT_EQ(apply_D_reindexed(a, names), apply_D(3, a));
  const std::vector<std::string> two{"z1", "z2"};
  EXPECT_EQ(apply_D_reindexed(a, two), apply_D(2, a));
}

TEST(DOperator, ReindexedOperatesOnNamedVariable) {
  VariableProfile p(zs(3), {3, 3, 3});
  // D_{z3, z1} z1^2 = (1 + z3 + z3^2) z1^2
  const std::vector<std::string> vars{"z3", "z1"};
  auto r = apply_D_reindexed(TruncatedSeries::monomial(p, {2, 0, 0}), vars);
  TruncatedSeries expected(p);
  for (int a = 0; a <= 2; ++a) expected.add_term({2, 0, a}, 1);
  EXPECT_EQ(r, expected);
  const std::vector<std::string> repeated{"z1", "z1"};
  EXPECT_THROW(apply_D_reindexed(r, repeated), InvalidArgument);
}

TEST(QDerivative, Monomials) {
  VariableProfile p({"q", "z"}, {6, 6});
  auto r = q_derivative(TruncatedSeries::monomial(p, {0, 4}), "z", "q");
  for (int a = 0; a <= 3; ++a) EXPECT_EQ(r.coefficient({a, 3}), 1);
  EXPECT_EQ(r.term_count(), 4u);
  EXPECT_TRUE(q_derivative(TruncatedSeries::constant(p, 2), "z", "q").is_zero());
  EXPECT_THROW(q_derivative(r, "z", "z"), InvalidArgument);
}

TEST(QDerivative, AtQEqualsOneIsOrdinaryDerivative) {
  VariableProfile p({"q", "z"}, {8, 8});
  for (int n = 1; n <= 8; ++n) {
    BigInt total = 0;
    q_derivative(TruncatedSeries::monomial(p, {0, n}), "z", "q").for_each_term([&](const Exponents& e, const BigInt& c) {
      EXPECT_EQ(e[1], n - 1);
      total += c;
    });
    EXPECT_EQ(total, n);
  }
}
