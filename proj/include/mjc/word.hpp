#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace mjc {

/// A weakly increasing word 0^{c_0} 1^{c_1} ... m^{c_m}, stored as its symbol
/// counts. The alphabet size (m+1) is part of the value. A word of length 0 is
/// the empty word, written "e".
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> counts);
  /// The empty word over an alphabet of `alphabet` symbols.
  static Word empty_over(int alphabet);

  int alphabet() const { return static_cast<int>(counts_.size()); }
  int count(int symbol) const;
  int length() const { return length_; }
  bool empty() const { return length_ == 0; }
  const std::vector<int>& counts() const { return counts_; }

  /// Same counts over a larger alphabet.
  Word widened(int alphabet) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<int> counts_;
  int length_ = 0;
};

/// Digits, e.g. "0011"; "e" for the empty word. Alphabets above 10 symbols
/// have no text form.
std::string to_string(const Word& w);
/// Parses digits (or "e") into a word over `alphabet` symbols; the digits must
/// be weakly increasing. Throws ParseError.
Word parse_word(std::string_view text, int alphabet);

/// A (b,k)-embedding: words 0^u 1^v, one per departure group.
struct Embedding {
  std::vector<Word> words;

  friend bool operator==(const Embedding&, const Embedding&) = default;
  friend auto operator<=>(const Embedding&, const Embedding&) = default;
};

/// Checks the (b,k)-embedding rules; returns an empty string when valid,
/// else a description of the first violation.
std::string embedding_violation(const Embedding& e, int b, int k);

/// Words joined by '|', e.g. "011|1|00|001|11"; the empty embedding is "".
std::string to_string(const Embedding& e);
Embedding parse_embedding(std::string_view text);

/// A (b,k,l)-embedding (gamma, delta). gamma words are over {0..l}; delta_i is
/// over {0..i-1} (stored widened to l+1 symbols) and may be empty.
struct SequenceEmbedding {
  std::vector<Word> gamma;
  std::vector<Word> delta;

  int length() const { return static_cast<int>(delta.size()); }

  friend bool operator==(const SequenceEmbedding&, const SequenceEmbedding&) = default;
  friend auto operator<=>(const SequenceEmbedding&, const SequenceEmbedding&) = default;
};

/// Empty string when (gamma, delta) is a valid (b,k,l)-embedding with l = delta.size().
std::string sequence_embedding_violation(const SequenceEmbedding& se, int b, int k);

/// "gamma=0004|112|2|4;delta=0000|0011|e|22".
std::string to_string(const SequenceEmbedding& se);
SequenceEmbedding parse_sequence_embedding(std::string_view text);

}  // namespace mjc
