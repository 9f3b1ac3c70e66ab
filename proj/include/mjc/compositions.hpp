#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mjc/bigint.hpp"

namespace mjc {

/// An ordered tuple of positive parts. The empty composition is the unique
/// composition of 0 and stands for the zero-ball state.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Sum of the parts.
  int size() const { return size_; }
  /// Number of parts.
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int max_part() const;

  friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Comma separated parts, e.g. "4,2,3"; the empty composition prints as "".
std::string to_string(const Composition& c);
/// Inverse of to_string. Throws ParseError.
Composition parse_composition(std::string_view text);

/// All compositions of n in lexicographic order of part lists.
std::vector<Composition> compositions(int n);
/// Compositions of n with exactly r parts, lexicographic.
std::vector<Composition> compositions_with_parts(int n, int r);
/// Compositions of n whose parts are all <= max_part, lexicographic.
std::vector<Composition> compositions_bounded(int n, int max_part);

/// Number of parts >= 2.
int ell2(const Composition& c);

/// Binomial coefficient extended so that C(-1,-1) = 1, C(-1,n) = C(n,-1) = 0
/// for n != -1, and 0 for every other out-of-range pair.
BigInt ext_binomial(long n, long m);

/// Complete homogeneous symmetric polynomial h_n(v_1, ..., v_m) evaluated in
/// any commutative ring with +, * and copy. `one` is the ring's unit.
/// Uses h_n(v_1..v_j) = h_n(v_1..v_{j-1}) + v_j * h_{n-1}(v_1..v_j).
template <class Ring>
Ring homogeneous(int n, std::span<const Ring> values, const Ring& one) {
  if (n == 0) return one;
  std::vector<Ring> h;
  h.reserve(static_cast<std::size_t>(n) + 1);
  h.push_back(one);
  for (int d = 1; d <= n; ++d) h.push_back(values[0] * h.back());
  for (std::size_t j = 1; j < values.size(); ++j) {
    for (int d = 1; d <= n; ++d) h[d] = h[d] + values[j] * h[d - 1];
  }
  return h[n];
}

}  // namespace mjc
