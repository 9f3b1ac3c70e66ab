#include "mjc/series.hpp"

#include <algorithm>
#include <limits>

#include "mjc/errors.hpp"

namespace mjc {

VariableProfile::VariableProfile(std::vector<std::string> names, std::vector<int> orders)
    : names_(std::move(names)), orders_(std::move(orders)) {
  if (names_.size() != orders_.size()) throw InvalidArgument("profile: names/orders length mismatch");
  if (names_.empty()) throw InvalidArgument("profile: at least one variable required");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (orders_[i] < 0) throw InvalidArgument("profile: negative truncation order for " + names_[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw InvalidArgument("profile: duplicate variable " + names_[i]);
    }
  }
  strides_.assign(names_.size(), 1);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t i = names_.size(); i-- > 0;) {
    strides_[i] = box_size_;
    auto radix = static_cast<std::uint64_t>(orders_[i]) + 1;
    if (box_size_ > kMax / radix) throw BudgetExceeded("profile: truncation box does not fit in 64 bits");
    box_size_ *= radix;
  }
}

VariableProfile VariableProfile::juggling(int x_order, int z_order, int ell) {
  std::vector<std::string> names{"x"};
  std::vector<int> orders{x_order};
  for (int i = 1; i <= ell; ++i) {
    names.push_back("z" + std::to_string(i));
    orders.push_back(z_order);
  }
  return VariableProfile(std::move(names), std::move(orders));
}

std::size_t VariableProfile::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  throw InvalidArgument("profile has no variable '" + std::string(name) + "'");
}

bool VariableProfile::contains(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

bool VariableProfile::in_box(std::span<const int> e) const {
  if (e.size() != orders_.size()) return false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] > orders_[i]) return false;
  }
  return true;
}

std::uint64_t VariableProfile::pack(std::span<const int> e) const {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < e.size(); ++i) key += static_cast<std::uint64_t>(e[i]) * strides_[i];
  return key;
}

Exponents VariableProfile::unpack(std::uint64_t key) const {
  Exponents e(orders_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = static_cast<int>(key / strides_[i]);
    key %= strides_[i];
  }
  return e;
}

TruncatedSeries::TruncatedSeries(VariableProfile profile) : profile_(std::move(profile)) {}

TruncatedSeries TruncatedSeries::constant(const VariableProfile& profile, const BigInt& c) {
  TruncatedSeries s(profile);
  s.add_term(Exponents(profile.arity(), 0), c);
  return s;
}

TruncatedSeries TruncatedSeries::monomial(const VariableProfile& profile, const Exponents& e, const BigInt& c) {
  if (e.size() != profile.arity()) throw InvalidArgument("monomial: exponent vector has wrong arity");
  TruncatedSeries s(profile);
  s.add_term(e, c);
  return s;
}

TruncatedSeries TruncatedSeries::variable(const VariableProfile& profile, std::string_view name) {
  Exponents e(profile.arity(), 0);
  e[profile.index_of(name)] = 1;
  return monomial(profile, e);
}

BigInt TruncatedSeries::coefficient(const Exponents& e) const {
  if (!profile_.in_box(e)) throw InvalidArgument("coefficient: exponent vector outside the truncation box");
  auto it = terms_.find(profile_.pack(e));
  return it == terms_.end() ? BigInt(0) : it->second;
}

void TruncatedSeries::add_term(const Exponents& e, const BigInt& c) {
  if (!profile_.in_box(e)) return;
  accumulate(profile_.pack(e), c);
}

void TruncatedSeries::accumulate(std::uint64_t key, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<std::pair<Exponents, BigInt>> TruncatedSeries::terms() const {
  std::vector<std::pair<Exponents, BigInt>> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) out.emplace_back(profile_.unpack(key), c);
  return out;
}

void TruncatedSeries::require_same_profile(const TruncatedSeries& o, const char* op) const {
  if (!(profile_ == o.profile_)) throw ProfileMismatch(std::string(op) + ": variable profiles differ");
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& [key, c] : r.terms_) c = -c;
  return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  require_same_profile(o, "add");
  for (const auto& [key, c] : o.terms_) accumulate(key, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  require_same_profile(o, "subtract");
  for (const auto& [key, c] : o.terms_) accumulate(key, -c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.require_same_profile(b, "multiply");
  const auto& prof = a.profile_;
  const std::size_t n = prof.arity();
  struct Term {
    Exponents e;
    std::uint64_t key;
    const BigInt* c;
  };
  std::vector<Term> rhs;
  rhs.reserve(b.terms_.size());
  for (const auto& [key, c] : b.terms_) rhs.push_back({prof.unpack(key), key, &c});

  TruncatedSeries r(prof);
  for (const auto& [ka, ca] : a.terms_) {
    Exponents ea = prof.unpack(ka);
    for (const auto& t : rhs) {
      bool fits = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (ea[i] + t.e[i] > prof.order(i)) {
          fits = false;
          break;
        }
      }
      // Packing is linear as long as no digit overflows its radix.
      if (fits) r.accumulate(ka + t.key, ca * *t.c);
    }
  }
  return r;
}

nlohmann::json TruncatedSeries::to_json() const {
  nlohmann::json j;
  j["vars"] = profile_.names();
  j["trunc"] = profile_.orders();
  auto terms = nlohmann::json::array();
  for (const auto& [key, c] : terms_) {
    terms.push_back({{"e", profile_.unpack(key)}, {"c", to_decimal(c)}});
  }
  j["terms"] = std::move(terms);
  return j;
}

TruncatedSeries invert(const TruncatedSeries& a) {
  const auto& prof = a.profile();
  const Exponents zero(prof.arity(), 0);
  const BigInt c0 = a.coefficient(zero);
  if (c0 != 1 && c0 != -1) throw InvalidArgument("invert: constant term must be +1 or -1");

  std::vector<std::pair<Exponents, BigInt>> rest;
  for (auto& [e, c] : a.terms()) {
    if (e != zero) rest.emplace_back(std::move(e), std::move(c));
  }

  // b_e = c0 * (delta_{e,0} - sum_{g != 0} a_g b_{e-g}); e - g precedes e in
  // lexicographic (= packed key) order, so one sweep over the box suffices.
  std::vector<BigInt> dense(prof.box_size());
  Exponents e(prof.arity(), 0);
  Exponents diff(prof.arity());
  for (std::uint64_t key = 0; key < prof.box_size(); ++key) {
    BigInt acc = key == 0 ? BigInt(1) : BigInt(0);
    for (const auto& [g, ag] : rest) {
      bool below = true;
      for (std::size_t i = 0; i < e.size(); ++i) {
        diff[i] = e[i] - g[i];
        if (diff[i] < 0) {
          below = false;
          break;
        }
      }
      if (below) {
        const auto& prev = dense[prof.pack(diff)];
        if (prev != 0) acc -= ag * prev;
      }
    }
    dense[key] = c0 * acc;
    // advance e as a mixed-radix counter, last variable fastest
    for (std::size_t i = e.size(); i-- > 0;) {
      if (++e[i] <= prof.order(i)) break;
      e[i] = 0;
    }
  }

  TruncatedSeries r(prof);
  for (std::uint64_t key = 0; key < dense.size(); ++key) {
    if (dense[key] != 0) r.add_term(prof.unpack(key), dense[key]);
  }
  return r;
}

XSeries extract_z_top(const TruncatedSeries& a, int k) {
  const auto& prof = a.profile();
  if (prof.name(0) != "x") throw InvalidArgument("extract_z_top: first variable must be x");
  for (std::size_t i = 1; i < prof.arity(); ++i) {
    if (k < 0 || k > prof.order(i)) throw InvalidArgument("extract_z_top: exponent outside the truncation box");
  }
  XSeries out(static_cast<std::size_t>(prof.order(0)) + 1);
  a.for_each_term([&](const Exponents& e, const BigInt& c) {
    for (std::size_t i = 1; i < e.size(); ++i) {
      if (e[i] != k) return;
    }
    out[static_cast<std::size_t>(e[0])] += c;
  });
  return out;
}

TruncatedSeries remap_variables(const TruncatedSeries& a, std::span<const std::size_t> perm) {
  const auto& prof = a.profile();
  if (perm.size() != prof.arity()) throw InvalidArgument("remap_variables: permutation has wrong arity");
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= perm.size() || seen[perm[i]]) throw InvalidArgument("remap_variables: not a permutation");
    seen[perm[i]] = true;
    if (prof.order(i) != prof.order(perm[i])) {
      throw InvalidArgument("remap_variables: permuted variables must share a truncation order");
    }
  }
  TruncatedSeries r(prof);
  a.for_each_term([&](const Exponents& e, const BigInt& c) {
    Exponents moved(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) moved[perm[i]] = e[i];
    r.add_term(moved, c);
  });
  return r;
}

TruncatedSeries scale_variable(const TruncatedSeries& a, std::size_t from, std::size_t into) {
  const auto& prof = a.profile();
  if (from >= prof.arity() || into >= prof.arity() || from == into) {
    throw InvalidArgument("scale_variable: bad variable indices");
  }
  TruncatedSeries r(prof);
  a.for_each_term([&](const Exponents& e, const BigInt& c) {
    Exponents moved = e;
    moved[into] += e[from];
    r.add_term(moved, c);
  });
  return r;
}

void check_box_budget(const VariableProfile& profile, const Budget& budget) {
  if (profile.box_size() > budget.max_monomials) {
    throw BudgetExceeded("series truncation box has " + std::to_string(profile.box_size()) +
                         " monomials, budget is " + std::to_string(budget.max_monomials));
  }
}

}  // namespace mjc
