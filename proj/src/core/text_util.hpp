#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "mjc/errors.hpp"

namespace mjc::detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    auto pos = s.find(sep);
    out.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

/// Parses "k1=v1;k2=v2;..." with exactly the given keys in the given order.
inline std::vector<std::string_view> parse_fields(std::string_view text, std::initializer_list<std::string_view> keys) {
  auto parts = split(trim(text), ';');
  if (parts.size() != keys.size()) {
    throw ParseError("expected " + std::to_string(keys.size()) + " ';'-separated fields in '" + std::string(text) + "'");
  }
  std::vector<std::string_view> values;
  std::size_t i = 0;
  for (auto key : keys) {
    auto part = parts[i++];
    auto eq = part.find('=');
    if (eq == std::string_view::npos || trim(part.substr(0, eq)) != key) {
      throw ParseError("expected field '" + std::string(key) + "=' in '" + std::string(text) + "'");
    }
    values.push_back(trim(part.substr(eq + 1)));
  }
  return values;
}

}  // namespace mjc::detail
