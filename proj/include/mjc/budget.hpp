#pragma once

#include <cstdint>

namespace mjc {

/// Guards for the exponential paths. Exceeding any of them raises BudgetExceeded.
struct Budget {
  /// Transfer-matrix dimension (compositions of b with parts <= k).
  std::uint64_t max_states = 2000;
  /// Explicitly materialized objects (cards, sequences, embeddings).
  std::uint64_t max_items = 5'000'000;
  /// Size of the truncation box of a multivariate series.
  std::uint64_t max_monomials = 4'000'000;
};

}  // namespace mjc
