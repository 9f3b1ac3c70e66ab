#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "mjc/compositions.hpp"
#include "mjc/word.hpp"

namespace mjc {

/// One beat: arrival groups, departure groups and the landing map
/// f: {1..s} -> {0} ∪ {1..t}, stored 1-based as landing[i-1] = f(i).
struct Card {
  Composition arrival;
  Composition departure;
  std::vector<int> landing;

  int balls() const { return arrival.size(); }
  /// Largest part of either composition, 0 for the empty card.
  int capacity() const { return std::max(arrival.max_part(), departure.max_part()); }
  /// f(1) = 0: the lowest arriving group is caught and rethrown.
  bool catches() const { return !landing.empty() && landing.front() == 0; }

  friend bool operator==(const Card&, const Card&) = default;
  friend auto operator<=>(const Card&, const Card&) = default;
};

enum class CardRule {
  kValid,
  kBallConservation,
  kLandingArity,
  kLandingRange,
  kLandingNotIncreasing,
  kLandingExceedsDeparture,
  kPassThroughNotIdentity,
};

struct CardVerdict {
  CardRule rule = CardRule::kValid;
  std::string detail;

  bool valid() const { return rule == CardRule::kValid; }
  explicit operator bool() const { return valid(); }
};

/// Reports the first violated card rule, checked in the order of CardRule.
CardVerdict validate_card(const Card& c);

/// The (b,k)-embedding of a card: word j is 0^{α_i} 1^{β_j - α_i} when
/// f(i) = j, else 1^{β_j}. Throws InvalidArgument for an invalid card.
Embedding card_to_embedding(const Card& c);
/// Inverse of card_to_embedding. Throws InvalidArgument for words that are not
/// over {0,1} or are empty.
Card embedding_to_card(const Embedding& e);

/// Every card with b balls and all parts <= k, via the embedding bijection.
std::vector<Card> enumerate_cards(int b, int k);

/// "arrival=4,2,3;departure=4,2,3;f=1,2,3" (empty fields for the empty card).
std::string format_card(const Card& c);
/// Strict inverse of format_card; whitespace around separators is ignored.
/// Throws ParseError for malformed text and InvalidArgument for invalid cards.
Card parse_card(std::string_view text);

/// ASCII diagram: arrival labels on the left, departure labels on the right,
/// both bottom to top; '*' marks a vertex and 'O' the ground vertex on the
/// bottom edge. Pass-through edges are '-' runs (routed through their own
/// '|' lane when they change level, with '+' corners). The drop from α_1 turns
/// down at '\' into the ':' ground trunk; each throw leaves the trunk at '/'.
std::string render_card(const Card& c);

}  // namespace mjc
