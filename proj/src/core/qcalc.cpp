#include "mjc/qcalc.hpp"

#include "mjc/compositions.hpp"
#include "mjc/errors.hpp"

namespace mjc {

TruncatedSeries homogeneous_in(const VariableProfile& profile, int n, std::span<const std::string> variables) {
  const auto one = TruncatedSeries::constant(profile, 1);
  std::vector<TruncatedSeries> values{one};
  for (const auto& v : variables) values.push_back(TruncatedSeries::variable(profile, v));
  return homogeneous<TruncatedSeries>(n, values, one);
}

DOperator::DOperator(const VariableProfile& profile, int m) : profile_(profile), m_(m) {
  if (m < 2) throw InvalidArgument("D operator needs at least two variables");
  for (int i = 1; i <= m; ++i) {
    if (!profile.contains("z" + std::to_string(i))) {
      throw InvalidArgument("D_{z1..z" + std::to_string(m) + "}: profile lacks z" + std::to_string(i));
    }
  }
  target_ = profile.index_of("z" + std::to_string(m));
}

TruncatedSeries DOperator::operator()(const TruncatedSeries& a) {
  if (!(a.profile() == profile_)) throw ProfileMismatch("D operator: variable profiles differ");
  std::vector<std::string> prefix;
  for (int i = 1; i < m_; ++i) prefix.push_back("z" + std::to_string(i));

  TruncatedSeries r(profile_);
  a.for_each_term([&](const Exponents& e, const BigInt& c) {
    const int n = e[target_];
    auto it = cache_.find(n);
    if (it == cache_.end()) {
      it = cache_.emplace(n, homogeneous_in(profile_, n, prefix).terms()).first;
    }
    for (const auto& [he, hc] : it->second) {
      Exponents out = e;
      for (std::size_t i = 0; i < out.size(); ++i) out[i] += he[i];
      r.add_term(out, c * hc);
    }
  });
  return r;
}

TruncatedSeries apply_D(int m, const TruncatedSeries& a) {
  DOperator d(a.profile(), m);
  return d(a);
}

TruncatedSeries apply_D_reindexed(const TruncatedSeries& a, std::span<const std::string> variables) {
  const auto& prof = a.profile();
  const int m = static_cast<int>(variables.size());
  if (m < 2) throw InvalidArgument("D operator needs at least two variables");
  // perm[old index] = new index; the listed variables go onto z1..zm in order,
  // the displaced canonical variables take the freed slots.
  const std::size_t n = prof.arity();
  std::vector<std::size_t> perm(n, n);
  std::vector<bool> taken(n, false);
  for (int i = 0; i < m; ++i) {
    const std::size_t from = prof.index_of(variables[static_cast<std::size_t>(i)]);
    const std::size_t to = prof.index_of("z" + std::to_string(i + 1));
    if (perm[from] != n) throw InvalidArgument("apply_D_reindexed: repeated variable");
    perm[from] = to;
    taken[to] = true;
  }
  std::size_t free_slot = 0;
  for (std::size_t from = 0; from < n; ++from) {
    if (perm[from] != n) continue;
    if (!taken[from]) {
      perm[from] = from;
      taken[from] = true;
    }
  }
  for (std::size_t from = 0; from < n; ++from) {
    if (perm[from] != n) continue;
    while (taken[free_slot]) ++free_slot;
    perm[from] = free_slot;
    taken[free_slot] = true;
  }
  std::vector<std::size_t> inverse(n);
  for (std::size_t i = 0; i < n; ++i) inverse[perm[i]] = i;
  return remap_variables(apply_D(m, remap_variables(a, perm)), inverse);
}

TruncatedSeries q_derivative(const TruncatedSeries& a, std::string_view z, std::string_view q) {
  const auto& prof = a.profile();
  const std::size_t zi = prof.index_of(z);
  const std::size_t qi = prof.index_of(q);
  if (zi == qi) throw InvalidArgument("q_derivative: z and q must differ");
  TruncatedSeries r(prof);
  a.for_each_term([&](const Exponents& e, const BigInt& c) {
    const int n = e[zi];
    for (int j = 0; j < n; ++j) {
      Exponents out = e;
      out[zi] = n - 1;
      out[qi] += j;
      r.add_term(out, c);
    }
  });
  return r;
}

}  // namespace mjc
