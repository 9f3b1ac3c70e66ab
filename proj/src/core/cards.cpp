#include "mjc/cards.hpp"

#include <algorithm>
#include <charconv>

#include "mjc/embeddings.hpp"
#include "mjc/errors.hpp"
#include "text_util.hpp"

namespace mjc {

CardVerdict validate_card(const Card& c) {
  const int s = c.arrival.length();
  const int t = c.departure.length();
  if (c.arrival.size() != c.departure.size()) {
    return {CardRule::kBallConservation, "arrival has " + std::to_string(c.arrival.size()) + " balls, departure has " +
                                             std::to_string(c.departure.size())};
  }
  if (static_cast<int>(c.landing.size()) != s) {
    return {CardRule::kLandingArity, "landing map lists " + std::to_string(c.landing.size()) + " values for " +
                                         std::to_string(s) + " arrival groups"};
  }
  for (int i = 0; i < s; ++i) {
    const int v = c.landing[static_cast<std::size_t>(i)];
    if (v < 0 || v > t) return {CardRule::kLandingRange, "f(" + std::to_string(i + 1) + ")=" + std::to_string(v) + " outside {0.." + std::to_string(t) + "}"};
  }
  for (int i = 1; i < s; ++i) {
    if (c.landing[static_cast<std::size_t>(i)] <= c.landing[static_cast<std::size_t>(i - 1)]) {
      return {CardRule::kLandingNotIncreasing, "f is not strictly increasing at " + std::to_string(i + 1)};
    }
  }
  for (int i = 0; i < s; ++i) {
    const int j = c.landing[static_cast<std::size_t>(i)];
    if (j != 0 && c.arrival[static_cast<std::size_t>(i)] > c.departure[static_cast<std::size_t>(j - 1)]) {
      return {CardRule::kLandingExceedsDeparture, "α_" + std::to_string(i + 1) + "=" + std::to_string(c.arrival[static_cast<std::size_t>(i)]) +
                                                      " > β_" + std::to_string(j) + "=" + std::to_string(c.departure[static_cast<std::size_t>(j - 1)])};
    }
  }
  if (s > 0 && !c.catches()) {
    bool identity = s == t;
    for (int i = 0; identity && i < s; ++i) identity = c.landing[static_cast<std::size_t>(i)] == i + 1;
    if (!identity) return {CardRule::kPassThroughNotIdentity, "f(1) != 0 requires s = t and f = id"};
  }
  return {};
}

Embedding card_to_embedding(const Card& c) {
  if (auto v = validate_card(c); !v) throw InvalidArgument("card_to_embedding: invalid card: " + v.detail);
  const int t = c.departure.length();
  std::vector<int> source(static_cast<std::size_t>(t), 0);  // 1-based arrival index landing at j, 0 if none
  for (std::size_t i = 0; i < c.landing.size(); ++i) {
    if (c.landing[i] != 0) source[static_cast<std::size_t>(c.landing[i] - 1)] = static_cast<int>(i) + 1;
  }
  Embedding e;
  for (int j = 0; j < t; ++j) {
    const int beta = c.departure[static_cast<std::size_t>(j)];
    const int zeros = source[static_cast<std::size_t>(j)] ? c.arrival[static_cast<std::size_t>(source[static_cast<std::size_t>(j)] - 1)] : 0;
    e.words.emplace_back(std::vector<int>{zeros, beta - zeros});
  }
  return e;
}

Card embedding_to_card(const Embedding& e) {
  std::vector<int> departure;
  std::vector<int> zero_words;  // 1-based indices of words containing a 0
  int ones = 0;
  for (std::size_t j = 0; j < e.words.size(); ++j) {
    const Word& w = e.words[j];
    if (w.alphabet() != 2 || w.empty()) throw InvalidArgument("embedding_to_card: words must be nonempty over {0,1}");
    departure.push_back(w.length());
    ones += w.count(1);
    if (w.count(0) > 0) zero_words.push_back(static_cast<int>(j) + 1);
  }
  Card c;
  c.departure = Composition(departure);
  std::vector<int> arrival;
  if (ones == 0) {
    arrival = departure;
    for (std::size_t j = 0; j < departure.size(); ++j) c.landing.push_back(static_cast<int>(j) + 1);
  } else {
    arrival.push_back(ones);
    c.landing.push_back(0);
    for (int j : zero_words) {
      arrival.push_back(e.words[static_cast<std::size_t>(j - 1)].count(0));
      c.landing.push_back(j);
    }
  }
  c.arrival = Composition(arrival);
  return c;
}

std::vector<Card> enumerate_cards(int b, int k) {
  std::vector<Card> out;
  for (const auto& e : enumerate_embeddings(b, k)) out.push_back(embedding_to_card(e));
  return out;
}

std::string format_card(const Card& c) {
  std::string f;
  for (std::size_t i = 0; i < c.landing.size(); ++i) {
    if (i) f += ',';
    f += std::to_string(c.landing[i]);
  }
  return "arrival=" + to_string(c.arrival) + ";departure=" + to_string(c.departure) + ";f=" + f;
}

Card parse_card(std::string_view text) {
  auto fields = detail::parse_fields(text, {"arrival", "departure", "f"});
  Card c;
  c.arrival = parse_composition(fields[0]);
  c.departure = parse_composition(fields[1]);
  if (!fields[2].empty()) {
    for (auto item : detail::split(fields[2], ',')) {
      int v = -1;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
        throw ParseError("bad landing value '" + std::string(item) + "'");
      }
      c.landing.push_back(v);
    }
  }
  if (auto v = validate_card(c); !v) throw InvalidArgument("invalid card: " + v.detail);
  return c;
}

namespace {

struct Canvas {
  std::vector<std::string> rows;
  void hline(std::size_t row, int from, int to) {
    for (int x = from; x <= to; ++x) rows[row][static_cast<std::size_t>(x)] = '-';
  }
  void put(std::size_t row, int col, char ch) { rows[row][static_cast<std::size_t>(col)] = ch; }
};

}  // namespace

std::string render_card(const Card& c) {
  if (auto v = validate_card(c); !v) throw InvalidArgument("render_card: invalid card: " + v.detail);
  const int s = c.arrival.length();
  const int t = c.departure.length();
  const int levels = std::max(s, t);
  auto straight = [&](int r) { return r <= s && r <= t && c.landing[static_cast<std::size_t>(r - 1)] == r; };

  // Text rows top to bottom; each remembers which vertices it carries.
  struct Row {
    int left = 0;   // arrival index on this row, 0 if none
    int right = 0;  // departure index on this row, 0 if none
  };
  std::vector<Row> layout;
  for (int r = levels; r >= 1; --r) {
    if (straight(r)) {
      layout.push_back({r, r});
      continue;
    }
    if (r <= t) layout.push_back({0, r});
    if (r <= s) layout.push_back({r, 0});
  }
  if (layout.empty()) layout.push_back({});
  std::vector<std::size_t> left_row(static_cast<std::size_t>(s) + 1), right_row(static_cast<std::size_t>(t) + 1);
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i].left) left_row[static_cast<std::size_t>(layout[i].left)] = i + 1;
    if (layout[i].right) right_row[static_cast<std::size_t>(layout[i].right)] = i + 1;
  }

  std::vector<std::pair<int, int>> lane_edges;
  for (int i = 1; i <= s; ++i) {
    const int j = c.landing[static_cast<std::size_t>(i - 1)];
    if (j != 0 && j != i) lane_edges.emplace_back(i, j);
  }
  const bool ground = c.catches();
  const int lanes = static_cast<int>(lane_edges.size());
  const int trunk = 2 + 2 * lanes;
  const int width = std::max(7, trunk + 3);

  Canvas cv;
  const std::size_t height = layout.size() + 2;
  cv.rows.assign(height, std::string(static_cast<std::size_t>(width), ' '));
  for (std::size_t y = 1; y + 1 < height; ++y) {
    cv.put(y, 0, layout[y - 1].left ? '*' : '|');
    cv.put(y, width - 1, layout[y - 1].right ? '*' : '|');
  }
  for (std::size_t y : {std::size_t{0}, height - 1}) {
    cv.hline(y, 1, width - 2);
    cv.put(y, 0, '+');
    cv.put(y, width - 1, '+');
  }

  for (int r = 1; r <= std::min(s, t); ++r) {
    if (straight(r)) cv.hline(left_row[static_cast<std::size_t>(r)], 1, width - 2);
  }
  std::vector<std::pair<std::size_t, int>> corners;
  for (int p = 0; p < lanes; ++p) {
    const auto [i, j] = lane_edges[static_cast<std::size_t>(p)];
    const int col = 2 + 2 * p;
    const std::size_t from = left_row[static_cast<std::size_t>(i)];
    const std::size_t to = right_row[static_cast<std::size_t>(j)];
    cv.hline(from, 1, col - 1);
    cv.hline(to, col + 1, width - 2);
    for (std::size_t y = std::min(from, to) + 1; y < std::max(from, to); ++y) cv.put(y, col, '|');
    corners.emplace_back(from, col);
    corners.emplace_back(to, col);
  }
  for (auto [y, x] : corners) cv.put(y, x, '+');

  if (ground) {
    std::vector<bool> landed(static_cast<std::size_t>(t) + 1, false);
    std::vector<bool> thrown(static_cast<std::size_t>(t) + 1, true);
    for (int i = 1; i <= s; ++i) {
      const int j = c.landing[static_cast<std::size_t>(i - 1)];
      if (j == 0) continue;
      landed[static_cast<std::size_t>(j)] = true;
      thrown[static_cast<std::size_t>(j)] = c.arrival[static_cast<std::size_t>(i - 1)] < c.departure[static_cast<std::size_t>(j - 1)];
    }
    const std::size_t drop_row = left_row[1];
    std::size_t top = drop_row;
    cv.hline(drop_row, 1, trunk - 1);
    std::vector<std::size_t> throw_rows;
    for (int j = 1; j <= t; ++j) {
      if (!thrown[static_cast<std::size_t>(j)]) continue;
      const std::size_t y = right_row[static_cast<std::size_t>(j)];
      cv.hline(y, trunk + 1, width - 2);
      throw_rows.push_back(y);
      top = std::min(top, y);
    }
    for (std::size_t y = top; y + 1 < height; ++y) cv.put(y, trunk, ':');
    for (auto y : throw_rows) cv.put(y, trunk, '/');
    cv.put(drop_row, trunk, '\\');
    cv.put(height - 1, trunk, 'O');
  } else {
    cv.put(height - 1, width / 2, 'O');
  }

  int lw = 0, rw = 0;
  for (int p : c.arrival.parts()) lw = std::max<int>(lw, static_cast<int>(std::to_string(p).size()));
  for (int p : c.departure.parts()) rw = std::max<int>(rw, static_cast<int>(std::to_string(p).size()));

  std::string out;
  for (std::size_t y = 0; y < height; ++y) {
    std::string left, right;
    if (y >= 1 && y + 1 < height) {
      const Row& row = layout[y - 1];
      if (row.left) left = std::to_string(c.arrival[static_cast<std::size_t>(row.left - 1)]);
      if (row.right) right = std::to_string(c.departure[static_cast<std::size_t>(row.right - 1)]);
    }
    std::string line;
    if (lw > 0) line += std::string(static_cast<std::size_t>(lw) - left.size(), ' ') + left + ' ';
    line += cv.rows[y];
    if (rw > 0 && !right.empty()) line += ' ' + right;
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace mjc
