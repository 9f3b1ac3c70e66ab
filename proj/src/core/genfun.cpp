#include "mjc/genfun.hpp"

#include "mjc/compositions.hpp"
#include "mjc/errors.hpp"
#include "mjc/qcalc.hpp"

namespace mjc {

namespace {

void require_capacity(int k) {
  if (k < 1) throw InvalidArgument("capacity must be at least 1");
}

void require_order(int order) {
  if (order < 0) throw InvalidArgument("truncation order must be nonnegative");
}

// 1 - x - x^2 - ... - x^k
Polynomial capacity_denominator(int k) {
  std::vector<BigInt> c(static_cast<std::size_t>(k) + 1, -1);
  c[0] = 1;
  return Polynomial(std::move(c));
}

}  // namespace

XSeries gf_prop1(int k, int order, const Budget& budget) {
  require_capacity(k);
  require_order(order);
  const auto prof = VariableProfile::juggling(order, k, 1);
  check_box_budget(prof, budget);
  const auto one = TruncatedSeries::constant(prof, 1);
  TruncatedSeries words(prof);  // Σ_{w} x^{len(w)} z^{ones(w)}
  for (int i = 1; i <= k; ++i) {
    for (int j = 0; j <= i; ++j) words.add_term({i, j}, 1);
  }
  const auto z = TruncatedSeries::variable(prof, "z1");
  return extract_z_top(invert(one - z) * invert(one - words), k);
}

RationalFunction gf_thm_l1(int k) {
  require_capacity(k);
  const Polynomial d = capacity_denominator(k);
  Polynomial numerator;
  for (const auto& alpha : compositions(k)) {
    const int parts = alpha.length();
    const BigInt sign = ell2(alpha) % 2 == 0 ? 1 : -1;
    // x^{k-ℓ} / d^{1+ℓ} over the common denominator d^{k+1}
    numerator += Polynomial::monomial(k - parts, sign) * d.pow(static_cast<unsigned>(k - parts));
  }
  return reduce(RationalFunction(numerator, d.pow(static_cast<unsigned>(k + 1))));
}

BigInt signed_composition_sum(int k, int r) {
  BigInt sum = 0;
  for (int s = 0; s <= r; ++s) {
    BigInt term = ext_binomial(r, s) * ext_binomial(k - r - 1, r - s - 1);
    sum += (r - s) % 2 == 0 ? term : BigInt(-term);
  }
  return sum;
}

RationalFunction gf_cor_l1(int k) {
  require_capacity(k);
  const Polynomial d = capacity_denominator(k);
  Polynomial numerator;
  for (int r = 1; r <= k; ++r) {
    numerator += Polynomial::monomial(k - r, signed_composition_sum(k, r)) * d.pow(static_cast<unsigned>(k - r));
  }
  return reduce(RationalFunction(numerator, d.pow(static_cast<unsigned>(k + 1))));
}

RationalFunction gf_infinite_rational() { return RationalFunction(Polynomial{1, -2, 1}, Polynomial{1, -4, 2}); }

XSeries gf_infinite(int order) {
  require_order(order);
  return expand(gf_infinite_rational(), order);
}

XSeries gf_infinite_recurrence(int order) {
  require_order(order);
  XSeries j{1, 2, 7};
  while (static_cast<int>(j.size()) <= order) {
    const std::size_t b = j.size();
    j.push_back(4 * j[b - 1] - 2 * j[b - 2]);
  }
  j.resize(static_cast<std::size_t>(order) + 1);
  return j;
}

TruncatedSeries thm3_integrand(int k, int ell, int order, const Budget& budget, int z_order) {
  require_capacity(k);
  require_order(order);
  if (ell < 1) throw InvalidArgument("sequence length must be at least 1");
  if (z_order < 0) z_order = k;
  if (z_order < k) throw InvalidArgument("z truncation must be at least k");
  const auto prof = VariableProfile::juggling(order, z_order, ell);
  check_box_budget(prof, budget);

  const auto one = TruncatedSeries::constant(prof, 1);
  const auto x = TruncatedSeries::variable(prof, "x");
  std::vector<TruncatedSeries> values{one, x};
  for (int i = 1; i <= ell; ++i) values.push_back(x * TruncatedSeries::variable(prof, "z" + std::to_string(i)));
  const auto h = homogeneous<TruncatedSeries>(k, values, one);

  TruncatedSeries a = invert(one * BigInt(2) - h);
  for (int m = ell; m >= 2; --m) a = DOperator(prof, m)(a);
  for (int i = 1; i <= ell; ++i) a = a * invert(one - TruncatedSeries::variable(prof, "z" + std::to_string(i)));
  return a;
}

XSeries gf_thm3(int k, int ell, int order, const Budget& budget, int z_order) {
  return extract_z_top(thm3_integrand(k, ell, order, budget, z_order), k);
}

}  // namespace mjc
