#pragma once

#include <initializer_list>

#include "mjc/bigint.hpp"
#include "mjc/cards.hpp"
#include "oracle.hpp"

namespace testing_util {

inline mjc::XSeries xs(std::initializer_list<long> v) {
  mjc::XSeries out;
  for (long x : v) out.emplace_back(x);
  return out;
}

inline mjc::Card card(std::initializer_list<int> a, std::initializer_list<int> d, std::initializer_list<int> f) {
  return mjc::Card{mjc::Composition(std::vector<int>(a)), mjc::Composition(std::vector<int>(d)), std::vector<int>(f)};
}

inline mjc::Card from_raw(const oracle::RawCard& c) {
  return mjc::Card{mjc::Composition(c.arrival), mjc::Composition(c.departure), c.landing};
}

// The four cards of the worked sequence example.
inline std::vector<mjc::Card> worked_sequence() {
  return {card({4, 2, 3}, {4, 3, 2}, {0, 1, 2}), card({4, 3, 2}, {2, 3, 3, 1}, {0, 2, 3}),
          card({2, 3, 3, 1}, {2, 3, 3, 1}, {1, 2, 3, 4}), card({2, 3, 3, 1}, {4, 3, 1, 1}, {0, 1, 2, 3})};
}

}  // namespace testing_util
