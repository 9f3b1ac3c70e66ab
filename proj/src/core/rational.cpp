#include "mjc/rational.hpp"

#include <algorithm>
#include <utility>

#include <boost/integer/common_factor.hpp>

#include "mjc/errors.hpp"

namespace mjc {

namespace mp = boost::multiprecision;

Polynomial::Polynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  normalize();
}

Polynomial Polynomial::monomial(int degree, const BigInt& c) {
  std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt Polynomial::operator[](int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

BigInt Polynomial::content() const {
  if (c_.empty()) return 0;
  BigInt g = 0;
  for (const auto& v : c_) g = mp::gcd(g, v);
  return c_.back() < 0 ? BigInt(-g) : g;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(r));
}

Polynomial operator*(Polynomial a, const BigInt& c) {
  for (auto& v : a.c_) v *= c;
  a.normalize();
  return a;
}

Polynomial Polynomial::operator-() const { return *this * BigInt(-1); }

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result{1};
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

std::vector<std::string> Polynomial::to_strings() const {
  std::vector<std::string> out;
  for (const auto& v : c_) out.push_back(to_decimal(v));
  if (out.empty()) out.emplace_back("0");
  return out;
}

Polynomial divide_exact(const Polynomial& p, const BigInt& c) {
  if (c == 0) throw InvalidArgument("divide_exact: division by zero");
  std::vector<BigInt> r;
  for (const auto& v : p.coefficients()) {
    if (v % c != 0) throw InvalidArgument("divide_exact: coefficient not divisible");
    r.push_back(v / c);
  }
  return Polynomial(std::move(r));
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw InvalidArgument("divide_exact: division by the zero polynomial");
  if (p.is_zero()) return {};
  if (p.degree() < d.degree()) throw InvalidArgument("divide_exact: divisor has larger degree");
  std::vector<BigInt> rem = p.coefficients();
  std::vector<BigInt> q(static_cast<std::size_t>(p.degree() - d.degree()) + 1);
  const BigInt& lead = d.coefficients().back();
  for (int i = p.degree() - d.degree(); i >= 0; --i) {
    const BigInt& top = rem[static_cast<std::size_t>(i + d.degree())];
    if (top % lead != 0) throw InvalidArgument("divide_exact: not divisible over the integers");
    BigInt f = top / lead;
    q[static_cast<std::size_t>(i)] = f;
    for (int j = 0; j <= d.degree(); ++j) rem[static_cast<std::size_t>(i + j)] -= f * d[j];
  }
  for (const auto& v : rem) {
    if (v != 0) throw InvalidArgument("divide_exact: nonzero remainder");
  }
  return Polynomial(std::move(q));
}

namespace {

using QPoly = std::vector<BigRational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_q(const Polynomial& p) {
  QPoly r;
  for (const auto& v : p.coefficients()) r.emplace_back(v);
  return r;
}

QPoly remainder(QPoly a, const QPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    BigRational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    a.pop_back();
    trim(a);
  }
  return a;
}

Polynomial primitive_integer(const QPoly& p) {
  if (p.empty()) return {};
  BigInt lcm = 1;
  for (const auto& v : p) lcm = boost::integer::lcm(lcm, mp::denominator(v));
  std::vector<BigInt> c;
  for (const auto& v : p) c.push_back(mp::numerator(v) * (lcm / mp::denominator(v)));
  Polynomial r(std::move(c));
  return divide_exact(r, r.content());
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  QPoly x = to_q(a);
  QPoly y = to_q(b);
  while (!y.empty()) {
    QPoly r = remainder(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return primitive_integer(x);
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw InvalidArgument("rational function with zero denominator");
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction reduce(const RationalFunction& rf) {
  if (rf.numerator().is_zero()) return RationalFunction(Polynomial{}, Polynomial{1});
  Polynomial g = gcd(rf.numerator(), rf.denominator());
  Polynomial num = divide_exact(rf.numerator(), g);
  Polynomial den = divide_exact(rf.denominator(), g);
  BigInt content = mp::gcd(num.content(), den.content());
  num = divide_exact(num, content);
  den = divide_exact(den, content);
  const BigInt sign_ref = den[0] != 0 ? den[0] : den.coefficients().back();
  if (sign_ref < 0) {
    num = -num;
    den = -den;
  }
  return RationalFunction(std::move(num), std::move(den));
}

XSeries expand(const RationalFunction& rf, int order) {
  if (order < 0) throw InvalidArgument("expand: negative truncation order");
  const Polynomial& den = rf.denominator();
  const BigInt d0 = den[0];
  if (d0 != 1 && d0 != -1) throw InvalidArgument("expand: denominator constant term must be +1 or -1");
  XSeries s(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    BigInt acc = rf.numerator()[n];
    for (int j = 1; j <= std::min(n, den.degree()); ++j) acc -= den[j] * s[static_cast<std::size_t>(n - j)];
    s[static_cast<std::size_t>(n)] = acc * d0;
  }
  return s;
}

std::vector<BigRational> Recurrence::char_poly() const {
  std::vector<BigRational> p{BigRational(1)};
  for (const auto& c : coeffs) p.push_back(-c);
  return p;
}

std::optional<Polynomial> Recurrence::integer_char_poly() const {
  std::vector<BigInt> p;
  for (const auto& c : char_poly()) {
    if (mp::denominator(c) != 1) return std::nullopt;
    p.push_back(mp::numerator(c));
  }
  return Polynomial(std::move(p));
}

bool Recurrence::holds_on(std::span<const BigInt> seq) const {
  const int d = order();
  for (std::size_t n = static_cast<std::size_t>(std::max(valid_from, d)); n < seq.size(); ++n) {
    BigRational acc = 0;
    for (int j = 1; j <= d; ++j) acc += coeffs[static_cast<std::size_t>(j - 1)] * BigRational(seq[n - static_cast<std::size_t>(j)]);
    if (acc != BigRational(seq[n])) return false;
  }
  return true;
}

XSeries Recurrence::extend(std::span<const BigInt> seq, std::size_t length) const {
  XSeries out(seq.begin(), seq.end());
  const auto d = static_cast<std::size_t>(order());
  while (out.size() < length) {
    if (out.size() < d || static_cast<int>(out.size()) < valid_from) {
      throw InvalidArgument("Recurrence::extend: not enough initial terms");
    }
    BigRational acc = 0;
    for (std::size_t j = 1; j <= d; ++j) acc += coeffs[j - 1] * BigRational(out[out.size() - j]);
    if (mp::denominator(acc) != 1) throw InvalidArgument("Recurrence::extend: non-integer continuation");
    out.push_back(mp::numerator(acc));
  }
  return out;
}

nlohmann::json Recurrence::to_json() const {
  std::vector<std::string> cs;
  for (const auto& c : coeffs) cs.push_back(to_decimal(c));
  std::vector<std::string> cp;
  for (const auto& c : char_poly()) cp.push_back(to_decimal(c));
  return {{"order", order()}, {"coeffs", cs}, {"valid_from", valid_from}, {"char_poly", cp}};
}

namespace {

// Solves rows * c = rhs exactly; free unknowns are set to zero. nullopt when
// the system is inconsistent.
std::optional<std::vector<BigRational>> solve(std::vector<std::vector<BigRational>> rows, std::size_t unknowns) {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < unknowns && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const BigRational inv = BigRational(1) / rows[r][col];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const BigRational f = rows[i][col];
      for (std::size_t j = col; j <= unknowns; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_cols.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i) {
    if (rows[i][unknowns] != 0) return std::nullopt;
  }
  std::vector<BigRational> c(unknowns, BigRational(0));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) c[pivot_cols[i]] = rows[i][unknowns];
  return c;
}

}  // namespace

std::optional<Recurrence> fit_recurrence(std::span<const BigInt> seq, int max_order) {
  if (max_order < 0) throw InvalidArgument("fit_recurrence: negative max_order");
  const int n_terms = static_cast<int>(seq.size());
  constexpr int kMaxPrePeriod = 2;
  constexpr int kExtraChecks = 2;
  for (int d = 0; d <= max_order; ++d) {
    for (int start = d; start <= d + kMaxPrePeriod; ++start) {
      const int equations = n_terms - start;
      if (equations < d + kExtraChecks) break;
      std::vector<std::vector<BigRational>> rows;
      for (int n = start; n < n_terms; ++n) {
        std::vector<BigRational> row;
        for (int j = 1; j <= d; ++j) row.emplace_back(seq[static_cast<std::size_t>(n - j)]);
        row.emplace_back(seq[static_cast<std::size_t>(n)]);
        rows.push_back(std::move(row));
      }
      auto c = solve(std::move(rows), static_cast<std::size_t>(d));
      if (!c) continue;
      Recurrence rec{std::move(*c), start};
      if (rec.holds_on(seq)) return rec;
    }
  }
  return std::nullopt;
}

}  // namespace mjc
