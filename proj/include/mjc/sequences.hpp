#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mjc/bigint.hpp"
#include "mjc/budget.hpp"
#include "mjc/cards.hpp"
#include "mjc/rational.hpp"

namespace mjc {

/// ℓ consecutive cards; each departure must equal the next arrival.
struct CardSequence {
  std::vector<Card> cards;

  int length() const { return static_cast<int>(cards.size()); }

  friend bool operator==(const CardSequence&, const CardSequence&) = default;
  friend auto operator<=>(const CardSequence&, const CardSequence&) = default;
};

/// departure(first) == arrival(second).
bool compatible(const Card& first, const Card& second);

/// Empty string when `seq` is an ℓ-card sequence with b balls and capacity k.
std::string sequence_violation(const CardSequence& seq, int b, int k);

/// Card counts between states: counts[a][d] is the number of cards with
/// arrival states[a] and departure states[d].
struct TransferMatrix {
  int balls = 0;
  int capacity = 1;
  std::vector<Composition> states;
  std::vector<std::vector<BigInt>> counts;

  std::size_t dimension() const { return states.size(); }
  BigInt total() const;
  /// {"b":…,"k":…,"states":[[parts]…],"counts":[[…]…]}; counts are decimal strings.
  nlohmann::json to_json() const;
};

/// Number of cards with the given arrival and departure (parts unrestricted).
BigInt count_cards_between(const Composition& arrival, const Composition& departure);

/// States are compositions_bounded(b, k) in lexicographic order.
TransferMatrix build_transfer_matrix(int b, int k, const Budget& budget = {});

/// J(b,k,ℓ): sum of the entries of T^ℓ. ℓ = 0 gives the number of states.
BigInt count_sequences(int b, int k, int ell, const Budget& budget = {});
/// J0(b,k,ℓ): trace of T^ℓ, sequences whose first arrival equals last departure.
BigInt count_periodic(int b, int k, int ell, const Budget& budget = {});
/// J(b,k,0..max_ell) from one transfer matrix.
std::vector<BigInt> count_sequences_by_length(int b, int k, int max_ell, const Budget& budget = {});

/// Exact matrix power by repeated squaring.
std::vector<std::vector<BigInt>> matrix_power(const std::vector<std::vector<BigInt>>& m, unsigned e);

/// det(x·I - T), ascending coefficients, monic.
Polynomial characteristic_polynomial(const TransferMatrix& t);

/// Walks every ℓ-card sequence by chaining cards (no transfer matrix), calling
/// visit(seq) for each; returns how many were visited. Throws BudgetExceeded
/// after budget.max_items visits.
std::uint64_t for_each_sequence(int b, int k, int ell, const std::function<void(const CardSequence&)>& visit,
                                const Budget& budget = {});

/// Every ℓ-card sequence, grouped by first card in enumeration order. Throws
/// BudgetExceeded when J(b,k,ℓ) exceeds budget.max_items.
std::vector<CardSequence> enumerate_sequences(int b, int k, int ell, const Budget& budget = {});

}  // namespace mjc
