#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "mjc/bigint.hpp"
#include "mjc/budget.hpp"

namespace mjc {

using Exponents = std::vector<int>;

/// Variable names with a truncation order each. Exponents above a variable's
/// order are discarded by every operation.
class VariableProfile {
 public:
  VariableProfile(std::vector<std::string> names, std::vector<int> orders);

  /// x truncated at x_order, followed by z1..z_ell truncated at z_order.
  static VariableProfile juggling(int x_order, int z_order, int ell);

  std::size_t arity() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  int order(std::size_t i) const { return orders_[i]; }
  std::span<const std::string> names() const { return names_; }
  std::span<const int> orders() const { return orders_; }
  /// Index of a variable by name; throws InvalidArgument when absent.
  std::size_t index_of(std::string_view name) const;
  bool contains(std::string_view name) const;

  /// Number of exponent vectors inside the truncation box.
  std::uint64_t box_size() const { return box_size_; }
  bool in_box(std::span<const int> e) const;

  std::uint64_t pack(std::span<const int> e) const;
  Exponents unpack(std::uint64_t key) const;

  friend bool operator==(const VariableProfile& a, const VariableProfile& b) {
    return a.names_ == b.names_ && a.orders_ == b.orders_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> orders_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t box_size_ = 1;
};

/// Sparse multivariate power series with exact integer coefficients,
/// truncated to the box of its profile. Zero coefficients are never stored.
/// Keys are packed with the first variable most significant, so iteration is
/// lexicographic in the exponent vector.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(VariableProfile profile);

  static TruncatedSeries constant(const VariableProfile& profile, const BigInt& c);
  static TruncatedSeries monomial(const VariableProfile& profile, const Exponents& e, const BigInt& c = 1);
  static TruncatedSeries variable(const VariableProfile& profile, std::string_view name);

  const VariableProfile& profile() const { return profile_; }

  /// Throws InvalidArgument for an exponent vector outside the box.
  BigInt coefficient(const Exponents& e) const;
  /// Adds c to the coefficient of e; silently drops terms outside the box.
  void add_term(const Exponents& e, const BigInt& c);

  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  std::vector<std::pair<Exponents, BigInt>> terms() const;

  template <class F>
  void for_each_term(F&& f) const {
    for (const auto& [key, c] : terms_) f(profile_.unpack(key), c);
  }

  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const BigInt& c);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const BigInt& c) { return a *= c; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.profile_ == b.profile_ && a.terms_ == b.terms_;
  }

  nlohmann::json to_json() const;

 private:
  void require_same_profile(const TruncatedSeries& o, const char* op) const;
  void accumulate(std::uint64_t key, const BigInt& c);

  VariableProfile profile_;
  std::map<std::uint64_t, BigInt> terms_;
};

/// Multiplicative inverse within the box. The constant term must be +1 or -1.
TruncatedSeries invert(const TruncatedSeries& a);

/// Coefficients of x^0..x^B at the point where every other variable has
/// exponent `k`. Variable 0 must be x.
XSeries extract_z_top(const TruncatedSeries& a, int k);

/// Moves exponents between variables: the exponent of variable i lands on
/// variable perm[i]. Variables swapped this way must share a truncation order.
TruncatedSeries remap_variables(const TruncatedSeries& a, std::span<const std::size_t> perm);

/// Multiplies every monomial by into^e[from], i.e. substitutes from -> from*into.
/// With from=z2, into=z1 this turns f(z2) into f(z1*z2).
TruncatedSeries scale_variable(const TruncatedSeries& a, std::size_t from, std::size_t into);

/// Throws BudgetExceeded when the profile's box is larger than the budget.
void check_box_budget(const VariableProfile& profile, const Budget& budget);

}  // namespace mjc
