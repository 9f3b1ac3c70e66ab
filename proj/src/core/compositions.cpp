#include "mjc/compositions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "mjc/errors.hpp"

namespace mjc {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw InvalidArgument("composition parts must be positive");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Composition::max_part() const {
  return parts_.empty() ? 0 : *std::max_element(parts_.begin(), parts_.end());
}

std::string to_string(const Composition& c) {
  std::string out;
  for (std::size_t i = 0; i < c.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Parts bounded by `max_part`, optionally with exactly `want_parts` parts (-1 = any).
void generate(int remaining, int max_part, int want_parts, std::vector<int>& prefix,
              std::vector<Composition>& out) {
  if (remaining == 0) {
    if (want_parts < 0 || static_cast<int>(prefix.size()) == want_parts) out.emplace_back(prefix);
    return;
  }
  if (want_parts >= 0) {
    int left = want_parts - static_cast<int>(prefix.size());
    if (left <= 0 || remaining < left) return;
  }
  for (int p = 1; p <= std::min(remaining, max_part); ++p) {
    prefix.push_back(p);
    generate(remaining - p, max_part, want_parts, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Composition parse_composition(std::string_view text) {
  text = trim(text);
  std::vector<int> parts;
  if (text.empty()) return Composition{};
  while (true) {
    auto comma = text.find(',');
    auto field = trim(text.substr(0, comma));
    int v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() || v < 1) {
      throw ParseError("bad composition part '" + std::string(field) + "'");
    }
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Composition(std::move(parts));
}

std::vector<Composition> compositions(int n) { return compositions_bounded(n, std::max(n, 1)); }

std::vector<Composition> compositions_with_parts(int n, int r) {
  if (n < 0 || r < 0) throw InvalidArgument("compositions_with_parts: negative argument");
  std::vector<Composition> out;
  std::vector<int> prefix;
  generate(n, std::max(n, 1), r, prefix, out);
  return out;
}

std::vector<Composition> compositions_bounded(int n, int max_part) {
  if (n < 0) throw InvalidArgument("compositions: n must be nonnegative");
  if (max_part < 1) throw InvalidArgument("compositions_bounded: max_part must be positive");
  std::vector<Composition> out;
  std::vector<int> prefix;
  generate(n, max_part, -1, prefix, out);
  return out;
}

int ell2(const Composition& c) {
  return static_cast<int>(std::count_if(c.parts().begin(), c.parts().end(), [](int p) { return p >= 2; }));
}

BigInt ext_binomial(long n, long m) {
  if (n == -1 || m == -1) return (n == -1 && m == -1) ? BigInt(1) : BigInt(0);
  if (n < 0 || m < 0 || m > n) return 0;
  m = std::min(m, n - m);
  BigInt r = 1;
  for (long i = 1; i <= m; ++i) {
    r *= n - m + i;
    r /= i;
  }
  return r;
}

std::vector<std::string> to_decimal_strings(const XSeries& s) {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (const auto& v : s) out.push_back(to_decimal(v));
  return out;
}

}  // namespace mjc
