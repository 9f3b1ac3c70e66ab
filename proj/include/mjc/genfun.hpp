#pragma once

#include "mjc/bigint.hpp"
#include "mjc/budget.hpp"
#include "mjc/rational.hpp"
#include "mjc/series.hpp"

namespace mjc {

/// J(0..B, k, 1) as [z^k] of (1/(1-z)) / (1 - Σ_{i=1..k} x^i Σ_{j=0..i} z^j).
XSeries gf_prop1(int k, int order, const Budget& budget = {});

/// Σ_{α ∈ Comp(k)} (-1)^{ℓ2(α)} x^{k-ℓ(α)} / (1-x-...-x^k)^{1+ℓ(α)}, reduced.
RationalFunction gf_thm_l1(int k);

/// The same sum grouped by number of parts r and number s of parts equal to 1,
/// weighted by binom(r,s)·binom(k-r-1, r-s-1) with extended binomials. Reduced.
RationalFunction gf_cor_l1(int k);

/// Σ_{α ∈ Comp(k,r)} (-1)^{ℓ2(α)} through the closed binomial sum.
BigInt signed_composition_sum(int k, int r);

/// (1-2x+x^2)/(1-4x+2x^2), the capacity-free card count.
RationalFunction gf_infinite_rational();
/// J(0..B, ∞, 1) by expanding gf_infinite_rational().
XSeries gf_infinite(int order);
/// J(0..B, ∞, 1) from J = 1, 2, 7 and J(b) = 4J(b-1) - 2J(b-2) for b >= 3.
XSeries gf_infinite_recurrence(int order);

/// The (ℓ+1)-variable series Π 1/(1-z_i) · D_{z1,z2} ⋯ D_{z1..zℓ} 1/(2 - h_k(1,x,xz1,...,xzℓ))
/// truncated at x^B and z_i^k (or z_i^z_order when z_order >= k). Operators
/// are applied innermost first.
TruncatedSeries thm3_integrand(int k, int ell, int order, const Budget& budget = {}, int z_order = -1);
/// J(0..B, k, ℓ) as the [z1^k ⋯ zℓ^k] coefficient of thm3_integrand.
XSeries gf_thm3(int k, int ell, int order, const Budget& budget = {}, int z_order = -1);

}  // namespace mjc
