#include <gtest/gtest.h>

#include <map>
#include <set>

#include "helpers.hpp"
#include "mjc/errors.hpp"
#include "mjc/sequences.hpp"

using namespace mjc;

namespace {

using Matrix = std::vector<std::vector<BigInt>>;

Matrix naive_product(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) c[i][j] += a[i][l] * b[l][j];
  return c;
}

}  // namespace

TEST(Transfer, CellsMatchOracleCards) {
  for (int b = 0; b <= 6; ++b) {
    for (int k = 1; k <= 3; ++k) {
      const auto t = build_transfer_matrix(b, k);
      std::map<std::pair<std::vector<int>, std::vector<int>>, long> cells;
      for (const auto& c : oracle::cards(b, k)) ++cells[{c.arrival, c.departure}];
      for (std::size_t i = 0; i < t.dimension(); ++i) {
        for (std::size_t j = 0; j < t.dimension(); ++j) {
          std::vector<int> a(t.states[i].parts().begin(), t.states[i].parts().end());
          std::vector<int> d(t.states[j].parts().begin(), t.states[j].parts().end());
          EXPECT_EQ(t.counts[i][j], BigInt(cells[{a, d}])) << b << " " << k;
        }
      }
      EXPECT_EQ(t.total(), BigInt(oracle::cards(b, k).size()));
    }
  }
}

TEST(Transfer, StatesAreBoundedCompositionsInOrder) {
  const auto t = build_transfer_matrix(4, 2);
  std::vector<std::string> names;
  for (const auto& s : t.states) names.push_back(to_string(s));
  EXPECT_EQ(names, (std::vector<std::string>{"1,1,1,1", "1,1,2", "1,2,1", "2,1,1", "2,2"}));
}

TEST(Transfer, JsonShape) {
  const auto j = build_transfer_matrix(2, 2).to_json();
  EXPECT_EQ(j.dump(), R"({"b":2,"counts":[["3","1"],["1","2"]],"k":2,"states":[[1,1],[2]]})");
}

TEST(Transfer, BudgetGuard) {
  Budget tiny;
  tiny.max_states = 10;
  EXPECT_THROW(build_transfer_matrix(8, 3, tiny), BudgetExceeded);
  EXPECT_THROW(build_transfer_matrix(-1, 3), InvalidArgument);
  EXPECT_THROW(build_transfer_matrix(2, 0), InvalidArgument);
}

TEST(Transfer, OneBallDoublesPerBeat) {
  for (int ell = 1; ell <= 8; ++ell) {
    EXPECT_EQ(count_sequences(1, 1, ell), BigInt(1) << ell);
    if (ell <= 6) EXPECT_EQ(oracle::count_chains(1, 1, ell), 1u << ell);
  }
}

TEST(Transfer, ZeroBallsAndZeroLength) {
  for (int ell = 0; ell <= 4; ++ell) EXPECT_EQ(count_sequences(0, 2, ell), 1);
  EXPECT_EQ(count_sequences(4, 2, 0), 5);  // number of states
}

TEST(Transfer, CountsMatchOracleChains) {
  for (int b = 0; b <= 5; ++b)
    for (int k = 1; k <= 3; ++k)
      for (int ell = 1; ell <= 3; ++ell) {
        EXPECT_EQ(count_sequences(b, k, ell), BigInt(oracle::count_chains(b, k, ell))) << b << k << ell;
        EXPECT_EQ(count_periodic(b, k, ell), BigInt(oracle::count_chains(b, k, ell, true))) << b << k << ell;
      }
}

TEST(Transfer, ByLengthAgreesWithSingleCounts) {
  const auto v = count_sequences_by_length(5, 2, 6);
  ASSERT_EQ(v.size(), 7u);
  for (int ell = 0; ell <= 6; ++ell) EXPECT_EQ(v[static_cast<std::size_t>(ell)], count_sequences(5, 2, ell));
}

TEST(Transfer, MatrixPowerMatchesRepeatedProduct) {
  const auto t = build_transfer_matrix(5, 3);
  Matrix acc(t.dimension(), std::vector<BigInt>(t.dimension(), 0));
  for (std::size_t i = 0; i < t.dimension(); ++i) acc[i][i] = 1;
  for (unsigned e = 0; e <= 6; ++e) {
    EXPECT_EQ(matrix_power(t.counts, e), acc);
    acc = naive_product(acc, t.counts);
  }
}

TEST(Transfer, CayleyHamilton) {
  for (int b = 1; b <= 5; ++b) {
    const auto t = build_transfer_matrix(b, 2);
    const auto p = characteristic_polynomial(t);
    ASSERT_EQ(p.degree(), static_cast<int>(t.dimension()));
    EXPECT_EQ(p[p.degree()], 1);
    Matrix sum(t.dimension(), std::vector<BigInt>(t.dimension(), 0));
    for (int i = 0; i <= p.degree(); ++i) {
      const auto pw = matrix_power(t.counts, static_cast<unsigned>(i));
      for (std::size_t r = 0; r < t.dimension(); ++r)
        for (std::size_t c = 0; c < t.dimension(); ++c) sum[r][c] += p[i] * pw[r][c];
    }
    for (const auto& row : sum)
      for (const auto& v : row) EXPECT_EQ(v, 0);
  }
}

TEST(Transfer, LengthSequenceFollowsCharacteristicRecurrence) {
  const auto t = build_transfer_matrix(2, 2);
  const auto p = characteristic_polynomial(t);  // x^2 - 5x + 5
  EXPECT_EQ(p, (Polynomial{5, -5, 1}));
  const auto j = count_sequences_by_length(2, 2, 12);
  for (int n = 2; n <= 12; ++n) {
    EXPECT_EQ(j[static_cast<std::size_t>(n)], 5 * j[static_cast<std::size_t>(n - 1)] - 5 * j[static_cast<std::size_t>(n - 2)]);
  }
}

TEST(Sequences, EnumerationMatchesCounts) {
  for (int b = 0; b <= 5; ++b)
    for (int k = 1; k <= 2; ++k)
      for (int ell = 1; ell <= 3; ++ell) {
        const auto all = enumerate_sequences(b, k, ell);
        EXPECT_EQ(BigInt(all.size()), count_sequences(b, k, ell));
        for (const auto& s : all) EXPECT_TRUE(sequence_violation(s, b, k).empty());
        EXPECT_EQ(std::set<CardSequence>(all.begin(), all.end()).size(), all.size());
      }
}

TEST(Sequences, WalkCountsAndBudget) {
  std::uint64_t seen = 0;
  EXPECT_EQ(for_each_sequence(4, 2, 3, [&](const CardSequence&) { ++seen; }), seen);
  EXPECT_EQ(BigInt(seen), count_sequences(4, 2, 3));
  Budget tiny;
  tiny.max_items = 10;
  EXPECT_THROW(for_each_sequence(4, 2, 3, [](const CardSequence&) {}, tiny), BudgetExceeded);
  EXPECT_THROW(enumerate_sequences(4, 2, 3, tiny), BudgetExceeded);
}

TEST(Sequences, WorkedExampleIsValid) {
  CardSequence s{testing_util::worked_sequence()};
  EXPECT_TRUE(sequence_violation(s, 9, 4).empty());
  EXPECT_FALSE(sequence_violation(s, 9, 3).empty());
  EXPECT_TRUE(compatible(s.cards[0], s.cards[1]));
  EXPECT_FALSE(compatible(s.cards[1], s.cards[0]));
  std::swap(s.cards[0], s.cards[1]);
  EXPECT_FALSE(sequence_violation(s, 9, 4).empty());
}

TEST(Sequences, CountCardsBetween) {
  EXPECT_EQ(count_cards_between(Composition({4, 2, 3}), Composition({4, 2, 3})), 3);  // identity plus two catches
  EXPECT_EQ(count_cards_between(Composition({1}), Composition({1})), 2);
  EXPECT_EQ(count_cards_between(Composition({2}), Composition({1, 1})), 1);
  EXPECT_EQ(count_cards_between(Composition({1, 1}), Composition({2})), 1);
  EXPECT_EQ(count_cards_between(Composition({1, 2}), Composition({2, 1})), 1);
  EXPECT_EQ(count_cards_between(Composition({1, 2}), Composition({1, 1, 1})), 0);
}
