#include "mjc/sequences.hpp"

#include <map>

#include "mjc/errors.hpp"

namespace mjc {

bool compatible(const Card& first, const Card& second) { return first.departure == second.arrival; }

std::string sequence_violation(const CardSequence& seq, int b, int k) {
  if (seq.cards.empty()) return "a card sequence needs at least one card";
  for (std::size_t i = 0; i < seq.cards.size(); ++i) {
    const Card& c = seq.cards[i];
    if (auto v = validate_card(c); !v) return "card " + std::to_string(i + 1) + ": " + v.detail;
    if (c.balls() != b) return "card " + std::to_string(i + 1) + " has " + std::to_string(c.balls()) + " balls";
    if (c.capacity() > k) return "card " + std::to_string(i + 1) + " exceeds capacity " + std::to_string(k);
    if (i + 1 < seq.cards.size() && !compatible(c, seq.cards[i + 1])) {
      return "card " + std::to_string(i + 1) + " departure differs from card " + std::to_string(i + 2) + " arrival";
    }
  }
  return {};
}

BigInt TransferMatrix::total() const {
  BigInt t = 0;
  for (const auto& row : counts) {
    for (const auto& v : row) t += v;
  }
  return t;
}

nlohmann::json TransferMatrix::to_json() const {
  auto st = nlohmann::json::array();
  for (const auto& s : states) st.push_back(std::vector<int>(s.parts().begin(), s.parts().end()));
  auto rows = nlohmann::json::array();
  for (const auto& row : counts) {
    auto r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(to_decimal(v));
    rows.push_back(std::move(r));
  }
  return {{"b", balls}, {"k", capacity}, {"states", std::move(st)}, {"counts", std::move(rows)}};
}

BigInt count_cards_between(const Composition& arrival, const Composition& departure) {
  if (arrival.size() != departure.size()) return 0;
  if (arrival.empty()) return 1;
  BigInt total = arrival == departure ? 1 : 0;
  // Catching cards: f(1) = 0 and f strictly increasing on 2..s with α_i <= β_f(i).
  const int s = arrival.length();
  const int t = departure.length();
  // ways[j] = number of placements of the parts handled so far whose last one sits at j (j = 0: none yet).
  std::vector<BigInt> ways(static_cast<std::size_t>(t) + 1, 0);
  ways[0] = 1;
  for (int i = 2; i <= s; ++i) {
    std::vector<BigInt> next(static_cast<std::size_t>(t) + 1, 0);
    BigInt prefix = 0;
    for (int j = 1; j <= t; ++j) {
      prefix += ways[static_cast<std::size_t>(j - 1)];
      if (arrival[static_cast<std::size_t>(i - 1)] <= departure[static_cast<std::size_t>(j - 1)]) next[static_cast<std::size_t>(j)] = prefix;
    }
    ways = std::move(next);
  }
  for (const auto& w : ways) total += w;
  return total;
}

TransferMatrix build_transfer_matrix(int b, int k, const Budget& budget) {
  if (b < 0 || k < 1) throw InvalidArgument("transfer matrix needs b >= 0 and k >= 1");
  TransferMatrix t;
  t.balls = b;
  t.capacity = k;
  t.states = compositions_bounded(b, k);
  if (t.states.size() > budget.max_states) {
    throw BudgetExceeded("transfer matrix would have " + std::to_string(t.states.size()) + " states, budget is " +
                         std::to_string(budget.max_states));
  }
  t.counts.assign(t.states.size(), std::vector<BigInt>(t.states.size(), 0));
  for (std::size_t a = 0; a < t.states.size(); ++a) {
    for (std::size_t d = 0; d < t.states.size(); ++d) t.counts[a][d] = count_cards_between(t.states[a], t.states[d]);
  }
  return t;
}

std::vector<std::vector<BigInt>> matrix_power(const std::vector<std::vector<BigInt>>& m, unsigned e) {
  const std::size_t n = m.size();
  auto multiply = [n](const auto& a, const auto& b) {
    std::vector<std::vector<BigInt>> r(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        if (a[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][l] * b[l][j];
      }
    }
    return r;
  };
  std::vector<std::vector<BigInt>> result(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) result[i][i] = 1;
  auto base = m;
  while (e) {
    if (e & 1u) result = multiply(result, base);
    e >>= 1u;
    if (e) base = multiply(base, base);
  }
  return result;
}

std::vector<BigInt> count_sequences_by_length(int b, int k, int max_ell, const Budget& budget) {
  if (max_ell < 0) throw InvalidArgument("sequence length must be nonnegative");
  const TransferMatrix t = build_transfer_matrix(b, k, budget);
  const std::size_t n = t.dimension();
  // Row vector 1^T T^l; its sum is J(b,k,l).
  std::vector<BigInt> v(n, 1);
  std::vector<BigInt> out;
  for (int ell = 0; ell <= max_ell; ++ell) {
    BigInt sum = 0;
    for (const auto& x : v) sum += x;
    out.push_back(sum);
    if (ell == max_ell) break;
    std::vector<BigInt> next(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      if (v[a] == 0) continue;
      for (std::size_t d = 0; d < n; ++d) next[d] += v[a] * t.counts[a][d];
    }
    v = std::move(next);
  }
  return out;
}

BigInt count_sequences(int b, int k, int ell, const Budget& budget) {
  return count_sequences_by_length(b, k, ell, budget).back();
}

BigInt count_periodic(int b, int k, int ell, const Budget& budget) {
  if (ell < 0) throw InvalidArgument("sequence length must be nonnegative");
  const TransferMatrix t = build_transfer_matrix(b, k, budget);
  const auto p = matrix_power(t.counts, static_cast<unsigned>(ell));
  BigInt trace = 0;
  for (std::size_t i = 0; i < p.size(); ++i) trace += p[i][i];
  return trace;
}

Polynomial characteristic_polynomial(const TransferMatrix& t) {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  const std::size_t n = t.dimension();
  const auto& a = t.counts;
  std::vector<BigInt> c(n + 1, 0);
  c[n] = 1;
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, 0));
  for (std::size_t step = 1; step <= n; ++step) {
    std::vector<std::vector<BigInt>> am(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        if (a[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) am[i][j] += a[i][l] * m[l][j];
      }
    }
    for (std::size_t i = 0; i < n; ++i) am[i][i] += c[n - step + 1];
    m = std::move(am);
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) trace += a[i][l] * m[l][i];
    }
    c[n - step] = -trace / static_cast<long>(step);
  }
  return Polynomial(std::move(c));
}

std::uint64_t for_each_sequence(int b, int k, int ell, const std::function<void(const CardSequence&)>& visit,
                                const Budget& budget) {
  if (ell < 1) throw InvalidArgument("card sequences need ell >= 1");
  const auto cards = enumerate_cards(b, k);
  std::map<Composition, std::vector<const Card*>> by_arrival;
  for (const auto& c : cards) by_arrival[c.arrival].push_back(&c);

  std::uint64_t visited = 0;
  CardSequence current;
  auto extend = [&](auto&& self, const Card& last) -> void {
    if (current.length() == ell) {
      if (++visited > budget.max_items) throw BudgetExceeded("card sequence walk exceeds the item budget");
      visit(current);
      return;
    }
    auto it = by_arrival.find(last.departure);
    if (it == by_arrival.end()) return;
    for (const Card* next : it->second) {
      current.cards.push_back(*next);
      self(self, *next);
      current.cards.pop_back();
    }
  };
  for (const auto& first : cards) {
    current.cards.assign(1, first);
    extend(extend, first);
  }
  return visited;
}

std::vector<CardSequence> enumerate_sequences(int b, int k, int ell, const Budget& budget) {
  if (ell < 1) throw InvalidArgument("enumerate_sequences needs ell >= 1");
  const BigInt expected = count_sequences(b, k, ell, budget);
  if (expected > budget.max_items) {
    throw BudgetExceeded("J(" + std::to_string(b) + "," + std::to_string(k) + "," + std::to_string(ell) + ") = " +
                         to_decimal(expected) + " sequences exceeds the item budget");
  }
  std::vector<CardSequence> out;
  for_each_sequence(b, k, ell, [&](const CardSequence& s) { out.push_back(s); }, budget);
  return out;
}

}  // namespace mjc
