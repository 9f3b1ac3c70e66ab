#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mjc/bigint.hpp"

namespace mjc {

/// Dense univariate polynomial in x over the integers, ascending coefficients.
/// Trailing zeros are stripped; the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  static Polynomial monomial(int degree, const BigInt& c = 1);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of x^i, zero beyond the degree.
  BigInt operator[](int i) const;
  const std::vector<BigInt>& coefficients() const { return c_; }

  /// gcd of the coefficients, sign of the leading coefficient; 0 for zero.
  BigInt content() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const BigInt& c);
  Polynomial operator-() const;

  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  std::vector<std::string> to_strings() const;

 private:
  void normalize();
  std::vector<BigInt> c_;
};

/// Divides every coefficient by c; throws InvalidArgument unless exact.
Polynomial divide_exact(const Polynomial& p, const BigInt& c);
/// Quotient p / d over the integers; throws InvalidArgument unless d | p exactly.
Polynomial divide_exact(const Polynomial& p, const Polynomial& d);
/// Greatest common divisor over Q, scaled to a primitive integer polynomial
/// with positive leading coefficient. gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// numerator / denominator, both integer polynomials in x.
class RationalFunction {
 public:
  /// Throws InvalidArgument for a zero denominator. Not reduced automatically.
  RationalFunction(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);

  /// Structural equality of (numerator, denominator); reduce both sides first
  /// to compare values.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Polynomial num_;
  Polynomial den_;
};

/// Cancels gcd(numerator, denominator) and the common integer content, then
/// fixes the sign so the denominator's constant term (or, when that is zero,
/// its leading coefficient) is positive. 0/q becomes 0/1.
RationalFunction reduce(const RationalFunction& rf);

/// Coefficients of x^0..x^B. The denominator's constant term must be +1 or -1.
XSeries expand(const RationalFunction& rf, int order);

/// a_n = c_1 a_{n-1} + ... + c_d a_{n-d} for all n >= valid_from.
struct Recurrence {
  std::vector<BigRational> coeffs;
  int valid_from = 0;

  int order() const { return static_cast<int>(coeffs.size()); }
  /// 1 - c_1 x - ... - c_d x^d, ascending.
  std::vector<BigRational> char_poly() const;
  /// char_poly as an integer polynomial (exact only when all c_i are integers).
  std::optional<Polynomial> integer_char_poly() const;
  /// Checks every index n >= valid_from of `seq` that has d predecessors.
  bool holds_on(std::span<const BigInt> seq) const;
  /// Continues `seq` to `length` terms.
  XSeries extend(std::span<const BigInt> seq, std::size_t length) const;

  /// {"order":d,"coeffs":[...],"valid_from":n0,"char_poly":[...]} with decimal strings.
  nlohmann::json to_json() const;
};

/// Minimal-order linear recurrence with constant coefficients found by exact
/// linear algebra over Q. Orders 0..max_order are tried in increasing order,
/// start indices d..d+2 for each, and a candidate is accepted only when it is
/// backed by at least two equations beyond the d that determine it.
std::optional<Recurrence> fit_recurrence(std::span<const BigInt> seq, int max_order);

}  // namespace mjc
