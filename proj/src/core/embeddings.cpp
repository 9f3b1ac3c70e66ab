#include "mjc/embeddings.hpp"

#include <algorithm>

#include "mjc/errors.hpp"

namespace mjc {

namespace {

void embeddings_rec(int remaining, int ones_left, int k, std::vector<Word>& prefix, std::vector<Embedding>& out) {
  if (remaining == 0) {
    out.push_back(Embedding{prefix});
    return;
  }
  for (int len = 1; len <= std::min(k, remaining); ++len) {
    for (int ones = 0; ones <= std::min(len, ones_left); ++ones) {
      prefix.emplace_back(std::vector<int>{len - ones, ones});
      embeddings_rec(remaining - len, ones_left - ones, k, prefix, out);
      prefix.pop_back();
    }
  }
}

// Calls f(counts) for every weak composition of n into `parts` nonnegative parts.
template <class F>
void for_each_weak_composition(int n, int parts, std::vector<int>& counts, int pos, F&& f) {
  if (pos == parts - 1) {
    counts[static_cast<std::size_t>(pos)] = n;
    f(counts);
    return;
  }
  for (int c = 0; c <= n; ++c) {
    counts[static_cast<std::size_t>(pos)] = c;
    for_each_weak_composition(n - c, parts, counts, pos + 1, f);
  }
}

}  // namespace

std::vector<Embedding> enumerate_embeddings(int b, int k) {
  if (b < 0 || k < 1) throw InvalidArgument("enumerate_embeddings needs b >= 0 and k >= 1");
  std::vector<Embedding> out;
  std::vector<Word> prefix;
  embeddings_rec(b, k, k, prefix, out);
  return out;
}

SequenceEmbedding sequence_to_embedding(const CardSequence& seq) {
  if (seq.cards.empty()) throw InvalidArgument("sequence_to_embedding: empty sequence");
  int k = 1;
  for (const auto& c : seq.cards) k = std::max(k, c.capacity());
  if (auto v = sequence_violation(seq, seq.cards.front().balls(), k); !v.empty()) {
    throw InvalidArgument("sequence_to_embedding: " + v);
  }
  const int ell = seq.length();
  const auto alphabet = static_cast<std::size_t>(ell) + 1;

  // α^(0): one word of zeros per arrival group of the first card.
  std::vector<Word> alpha;
  for (int part : seq.cards.front().arrival.parts()) {
    std::vector<int> counts(alphabet, 0);
    counts[0] = part;
    alpha.emplace_back(std::move(counts));
  }

  SequenceEmbedding se;
  for (int i = 1; i <= ell; ++i) {
    const Card& card = seq.cards[static_cast<std::size_t>(i - 1)];
    if (!card.catches()) {
      se.delta.push_back(Word::empty_over(ell + 1));
      continue;
    }
    se.delta.push_back(alpha.front());
    std::vector<Word> next;
    std::size_t source = 1;
    for (const Word& w : card_to_embedding(card).words) {
      std::vector<int> counts(alphabet, 0);
      if (w.count(0) > 0) {
        const Word& earlier = alpha.at(source++);
        if (earlier.length() != w.count(0)) throw std::logic_error("zero block and spliced word differ in length");
        counts = earlier.counts();
      }
      counts[static_cast<std::size_t>(i)] += w.count(1);
      next.emplace_back(std::move(counts));
    }
    if (source != alpha.size()) throw std::logic_error("not every earlier word was spliced");
    alpha = std::move(next);
  }
  se.gamma = std::move(alpha);
  return se;
}

CardSequence embedding_to_sequence(const SequenceEmbedding& se) {
  const int ell = se.length();
  if (ell < 1) throw InvalidArgument("embedding_to_sequence: delta must have at least one word");
  for (const auto& w : se.gamma) {
    if (w.alphabet() != ell + 1 || w.empty()) throw InvalidArgument("embedding_to_sequence: bad gamma word");
  }

  std::vector<std::vector<Word>> alphas(static_cast<std::size_t>(ell) + 1);
  alphas[static_cast<std::size_t>(ell)] = se.gamma;
  for (int i = ell; i >= 1; --i) {
    const auto& cur = alphas[static_cast<std::size_t>(i)];
    const Word& delta = se.delta[static_cast<std::size_t>(i - 1)];
    if (delta.alphabet() != ell + 1) throw InvalidArgument("embedding_to_sequence: bad delta alphabet");
    int occurrences = 0;
    for (const auto& w : cur) {
      for (int s = i + 1; s <= ell; ++s) {
        if (w.count(s) != 0) throw InvalidArgument("embedding_to_sequence: symbol " + std::to_string(s) + " survives past its beat");
      }
      occurrences += w.count(i);
    }
    for (int s = i; s <= ell; ++s) {
      if (delta.count(s) != 0) throw InvalidArgument("embedding_to_sequence: delta_" + std::to_string(i) + " uses symbol " + std::to_string(s));
    }
    if (delta.length() != occurrences) {
      throw InvalidArgument("embedding_to_sequence: delta_" + std::to_string(i) + " has length " + std::to_string(delta.length()) +
                            " but symbol " + std::to_string(i) + " occurs " + std::to_string(occurrences) + " times");
    }
    auto& prev = alphas[static_cast<std::size_t>(i - 1)];
    if (delta.empty()) {
      prev = cur;
      continue;
    }
    prev.push_back(delta);
    for (const auto& w : cur) {
      auto counts = w.counts();
      counts[static_cast<std::size_t>(i)] = 0;
      Word stripped(std::move(counts));
      if (!stripped.empty()) prev.push_back(std::move(stripped));
    }
  }

  CardSequence seq;
  for (int i = 1; i <= ell; ++i) {
    Embedding e;
    for (const auto& w : alphas[static_cast<std::size_t>(i)]) {
      const int ones = w.count(i);
      e.words.emplace_back(std::vector<int>{w.length() - ones, ones});
    }
    Card card = embedding_to_card(e);
    std::vector<int> lengths;
    for (const auto& w : alphas[static_cast<std::size_t>(i - 1)]) lengths.push_back(w.length());
    if (card.arrival != Composition(lengths)) {
      throw InvalidArgument("embedding_to_sequence: card " + std::to_string(i) + " does not continue the previous state");
    }
    seq.cards.push_back(std::move(card));
  }
  return seq;
}

namespace {

struct SequenceEnumerator {
  int k;
  int ell;
  std::uint64_t max_items;
  std::vector<int> totals;  // occurrences of each symbol so far
  SequenceEmbedding current;
  std::vector<SequenceEmbedding> out;

  void push(SequenceEmbedding se) {
    if (out.size() >= max_items) throw BudgetExceeded("sequence embedding enumeration exceeds the item budget");
    out.push_back(std::move(se));
  }

  // δ_i for i = ell..1; δ_i's length is the running count of symbol i.
  void deltas(int i) {
    if (i == 0) {
      SequenceEmbedding se = current;
      std::reverse(se.delta.begin(), se.delta.end());
      push(std::move(se));
      return;
    }
    const int need = totals[static_cast<std::size_t>(i)];
    if (need > k) return;
    if (need == 0) {
      current.delta.push_back(Word::empty_over(ell + 1));
      deltas(i - 1);
      current.delta.pop_back();
      return;
    }
    std::vector<int> counts(static_cast<std::size_t>(i), 0);
    for_each_weak_composition(need, i, counts, 0, [&](const std::vector<int>& c) {
      for (int s = 0; s < i; ++s) totals[static_cast<std::size_t>(s)] += c[static_cast<std::size_t>(s)];
      current.delta.push_back(Word(c).widened(ell + 1));
      deltas(i - 1);
      current.delta.pop_back();
      for (int s = 0; s < i; ++s) totals[static_cast<std::size_t>(s)] -= c[static_cast<std::size_t>(s)];
    });
  }

  void gamma(int remaining) {
    if (remaining == 0) {
      deltas(ell);
      return;
    }
    std::vector<int> counts(static_cast<std::size_t>(ell) + 1, 0);
    for (int len = 1; len <= std::min(k, remaining); ++len) {
      for_each_weak_composition(len, ell + 1, counts, 0, [&](const std::vector<int>& c) {
        bool within = true;
        for (int s = 1; s <= ell; ++s) {
          totals[static_cast<std::size_t>(s)] += c[static_cast<std::size_t>(s)];
          within = within && totals[static_cast<std::size_t>(s)] <= k;
        }
        if (within) {
          current.gamma.emplace_back(c);
          gamma(remaining - len);
          current.gamma.pop_back();
        }
        for (int s = 1; s <= ell; ++s) totals[static_cast<std::size_t>(s)] -= c[static_cast<std::size_t>(s)];
      });
    }
  }
};

}  // namespace

std::vector<SequenceEmbedding> enumerate_sequence_embeddings(int b, int k, int ell, const Budget& budget) {
  if (b < 0 || k < 1 || ell < 1) throw InvalidArgument("enumerate_sequence_embeddings needs b >= 0, k >= 1, ell >= 1");
  SequenceEnumerator en{k, ell, budget.max_items, std::vector<int>(static_cast<std::size_t>(ell) + 1, 0), {}, {}};
  en.gamma(b);
  return std::move(en.out);
}

}  // namespace mjc
