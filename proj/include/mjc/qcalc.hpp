#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>
#include <string_view>

#include "mjc/series.hpp"

namespace mjc {

/// The operator D_{z1,...,zm}: each monomial carrying z_m^n is multiplied by
/// h_n(1, z1, ..., z_{m-1}); the exponent of z_m is left alone. Variables are
/// looked up by the names "z1".."zm". Multipliers h_n are cached per n, so
/// one instance should be reused across a pipeline run.
class DOperator {
 public:
  DOperator(const VariableProfile& profile, int m);

  int arity() const { return m_; }
  TruncatedSeries operator()(const TruncatedSeries& a);

 private:
  VariableProfile profile_;
  int m_;
  std::size_t target_;
  std::map<int, std::vector<std::pair<Exponents, BigInt>>> cache_;
};

/// One-shot D_{z1,...,zm}. Requires 2 <= m and z1..zm in the profile.
TruncatedSeries apply_D(int m, const TruncatedSeries& a);

/// D over an arbitrary ordered variable list: the last entry is the operated
/// variable, the others are the h_n arguments. Realized by renaming the
/// variables onto z1..zm with remap_variables, applying apply_D, and renaming
/// back. All variables involved must share a truncation order.
TruncatedSeries apply_D_reindexed(const TruncatedSeries& a, std::span<const std::string> variables);

/// The q-derivative in `z` with parameter `q`:
/// z^n -> (1 + q + ... + q^{n-1}) z^{n-1}.
TruncatedSeries q_derivative(const TruncatedSeries& a, std::string_view z, std::string_view q);

/// h_n(1, v_1, ..., v_j) as a series, for the named variables.
TruncatedSeries homogeneous_in(const VariableProfile& profile, int n, std::span<const std::string> variables);

}  // namespace mjc
