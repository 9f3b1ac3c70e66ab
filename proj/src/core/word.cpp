#include "mjc/word.hpp"

#include <numeric>

#include "mjc/errors.hpp"
#include "text_util.hpp"

namespace mjc {

Word::Word(std::vector<int> counts) : counts_(std::move(counts)) {
  for (int c : counts_) {
    if (c < 0) throw InvalidArgument("word symbol counts must be nonnegative");
  }
  length_ = std::accumulate(counts_.begin(), counts_.end(), 0);
}

Word Word::empty_over(int alphabet) { return Word(std::vector<int>(static_cast<std::size_t>(alphabet), 0)); }

int Word::count(int symbol) const {
  if (symbol < 0 || symbol >= alphabet()) return 0;
  return counts_[static_cast<std::size_t>(symbol)];
}

Word Word::widened(int alphabet) const {
  if (alphabet < this->alphabet()) throw InvalidArgument("Word::widened: alphabet would shrink");
  auto c = counts_;
  c.resize(static_cast<std::size_t>(alphabet), 0);
  return Word(std::move(c));
}

std::string to_string(const Word& w) {
  if (w.empty()) return "e";
  if (w.alphabet() > 10) throw InvalidArgument("words over more than 10 symbols have no text form");
  std::string s;
  for (int sym = 0; sym < w.alphabet(); ++sym) s.append(static_cast<std::size_t>(w.count(sym)), static_cast<char>('0' + sym));
  return s;
}

Word parse_word(std::string_view text, int alphabet) {
  text = detail::trim(text);
  if (text == "e") return Word::empty_over(alphabet);
  if (text.empty()) throw ParseError("empty word text (use 'e' for the empty word)");
  std::vector<int> counts(static_cast<std::size_t>(alphabet), 0);
  int last = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw ParseError(std::string("bad word symbol '") + ch + "'");
    int sym = ch - '0';
    if (sym >= alphabet) throw ParseError("word symbol " + std::to_string(sym) + " outside the alphabet");
    if (sym < last) throw ParseError("word '" + std::string(text) + "' is not weakly increasing");
    last = sym;
    ++counts[static_cast<std::size_t>(sym)];
  }
  return Word(std::move(counts));
}

std::string embedding_violation(const Embedding& e, int b, int k) {
  int total = 0;
  int ones = 0;
  for (std::size_t j = 0; j < e.words.size(); ++j) {
    const Word& w = e.words[j];
    if (w.alphabet() != 2) return "word " + std::to_string(j + 1) + " is not over {0,1}";
    if (w.length() < 1 || w.length() > k) {
      return "word " + std::to_string(j + 1) + " has length " + std::to_string(w.length()) + ", outside [1," + std::to_string(k) + "]";
    }
    total += w.length();
    ones += w.count(1);
  }
  if (ones > k) return "embedding has " + std::to_string(ones) + " ones, more than k=" + std::to_string(k);
  if (total != b) return "embedding has total length " + std::to_string(total) + ", expected b=" + std::to_string(b);
  return {};
}

std::string to_string(const Embedding& e) {
  std::string s;
  for (std::size_t j = 0; j < e.words.size(); ++j) {
    if (j) s += '|';
    s += to_string(e.words[j]);
  }
  return s;
}

Embedding parse_embedding(std::string_view text) {
  Embedding e;
  text = detail::trim(text);
  if (text.empty()) return e;
  for (auto field : detail::split(text, '|')) {
    Word w = parse_word(field, 2);
    if (w.empty()) throw ParseError("(b,k)-embedding words must be nonempty");
    e.words.push_back(std::move(w));
  }
  return e;
}

std::string sequence_embedding_violation(const SequenceEmbedding& se, int b, int k) {
  const int ell = se.length();
  if (ell < 1) return "delta must have at least one word";
  int total = 0;
  std::vector<int> symbol_total(static_cast<std::size_t>(ell) + 1, 0);
  for (std::size_t j = 0; j < se.gamma.size(); ++j) {
    const Word& w = se.gamma[j];
    if (w.alphabet() != ell + 1) return "gamma word " + std::to_string(j + 1) + " has the wrong alphabet";
    if (w.length() < 1 || w.length() > k) return "gamma word " + std::to_string(j + 1) + " has length outside [1,k]";
    total += w.length();
    for (int s = 0; s <= ell; ++s) symbol_total[static_cast<std::size_t>(s)] += w.count(s);
  }
  if (total != b) return "gamma has total length " + std::to_string(total) + ", expected b=" + std::to_string(b);
  for (int i = ell; i >= 1; --i) {
    const Word& d = se.delta[static_cast<std::size_t>(i - 1)];
    if (d.alphabet() != ell + 1) return "delta_" + std::to_string(i) + " has the wrong alphabet";
    for (int s = i; s <= ell; ++s) {
      if (d.count(s) != 0) return "delta_" + std::to_string(i) + " uses symbol " + std::to_string(s) + " >= " + std::to_string(i);
    }
    if (d.length() > k) return "delta_" + std::to_string(i) + " is longer than k";
    if (d.length() != symbol_total[static_cast<std::size_t>(i)]) {
      return "delta_" + std::to_string(i) + " has length " + std::to_string(d.length()) + " but there are " +
             std::to_string(symbol_total[static_cast<std::size_t>(i)]) + " occurrences of " + std::to_string(i);
    }
    for (int s = 0; s < i; ++s) symbol_total[static_cast<std::size_t>(s)] += d.count(s);
  }
  return {};
}

std::string to_string(const SequenceEmbedding& se) {
  std::string s = "gamma=";
  for (std::size_t j = 0; j < se.gamma.size(); ++j) {
    if (j) s += '|';
    s += to_string(se.gamma[j]);
  }
  s += ";delta=";
  for (std::size_t j = 0; j < se.delta.size(); ++j) {
    if (j) s += '|';
    s += to_string(se.delta[j]);
  }
  return s;
}

SequenceEmbedding parse_sequence_embedding(std::string_view text) {
  auto fields = detail::parse_fields(text, {"gamma", "delta"});
  SequenceEmbedding se;
  auto delta_words = detail::split(fields[1], '|');
  if (detail::trim(fields[1]).empty()) throw ParseError("delta must list at least one word");
  const int ell = static_cast<int>(delta_words.size());
  if (ell > 9) throw ParseError("sequence embeddings with more than 9 cards have no text form");
  for (auto w : delta_words) se.delta.push_back(parse_word(w, ell + 1));
  if (!detail::trim(fields[0]).empty()) {
    for (auto w : detail::split(fields[0], '|')) {
      Word word = parse_word(w, ell + 1);
      if (word.empty()) throw ParseError("gamma words must be nonempty");
      se.gamma.push_back(std::move(word));
    }
  }
  return se;
}

}  // namespace mjc
