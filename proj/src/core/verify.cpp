#include "mjc/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <random>
#include <set>
#include <sstream>

#include "mjc/cards.hpp"
#include "mjc/embeddings.hpp"
#include "mjc/errors.hpp"
#include "mjc/genfun.hpp"
#include "mjc/qcalc.hpp"
#include "mjc/rational.hpp"
#include "mjc/sequences.hpp"

namespace mjc {

nlohmann::json CheckResult::to_json() const {
  return {{"id", id}, {"name", name}, {"params", params}, {"passed", passed}, {"detail", detail}};
}

unsigned parse_suite(const std::string& name) {
  if (name == "identities") return kSuiteIdentities;
  if (name == "cross") return kSuiteCross;
  if (name == "bijections") return kSuiteBijections;
  if (name == "oeis") return kSuiteOeis;
  if (name == "all") return kSuiteAll;
  throw InvalidArgument("unknown suite '" + name + "'");
}

namespace {

// Empty detail means the check passed.
using Body = std::function<std::string()>;

struct Check {
  std::string id;
  std::string name;
  std::string params;
  Body body;
};

std::string join(const XSeries& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += to_decimal(s[i]);
  }
  return out;
}

std::string compare(const std::string& what_a, const XSeries& a, const std::string& what_b, const XSeries& b) {
  if (a == b) return {};
  return what_a + " [" + join(a) + "] != " + what_b + " [" + join(b) + "]";
}

std::string bkl(int b, int k, int ell) {
  return "b=" + std::to_string(b) + " k=" + std::to_string(k) + " l=" + std::to_string(ell);
}

std::string two_digit(int v) { return (v < 10 ? "0" : "") + std::to_string(v); }

XSeries from_longs(std::initializer_list<long> v) {
  XSeries out;
  for (long x : v) out.emplace_back(x);
  return out;
}

std::vector<std::string> z_names(int m) {
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) names.push_back("z" + std::to_string(i));
  return names;
}

TruncatedSeries random_series(const VariableProfile& prof, std::mt19937_64& rng, int terms) {
  TruncatedSeries out(prof);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int t = 0; t < terms; ++t) {
    Exponents e(prof.arity());
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = std::uniform_int_distribution<int>(0, prof.order(i))(rng);
    }
    out.add_term(e, coef(rng));
  }
  return out;
}

// ---- identities ----

void add_identity_checks(std::vector<Check>& out, const VerifyOptions& opt) {
  out.push_back({"identities.01.h-splitting", "h_n splitting across two variables", "n<=8, 2<=m<=5", [] {
                   for (int m = 2; m <= 5; ++m) {
                     for (int n = 0; n <= 8; ++n) {
                       const auto names = z_names(m);
                       VariableProfile prof(names, std::vector<int>(static_cast<std::size_t>(m), n + 1));
                       const auto zm1 = TruncatedSeries::variable(prof, names[static_cast<std::size_t>(m - 2)]);
                       const auto zm = TruncatedSeries::variable(prof, names[static_cast<std::size_t>(m - 1)]);
                       std::vector<std::string> without_m(names.begin(), names.end() - 1);
                       std::vector<std::string> without_m1(names.begin(), names.end() - 2);
                       without_m1.push_back(names.back());
                       const auto lhs = (zm1 - zm) * homogeneous_in(prof, n, names);
                       const auto rhs = zm1 * homogeneous_in(prof, n, without_m) - zm * homogeneous_in(prof, n, without_m1);
                       if (!(lhs == rhs)) return "mismatch at m=" + std::to_string(m) + " n=" + std::to_string(n);
                     }
                   }
                   return std::string{};
                 }});

  const std::uint64_t seed = opt.seed;
  out.push_back({"identities.02.d-splitting", "D operator splitting on random series", "2<=m<=4, 100 trials",
                 [seed] {
                   std::mt19937_64 rng(seed);
                   for (int trial = 0; trial < 100; ++trial) {
                     const int m = 2 + trial % 3;
                     const auto names = z_names(m + 1);
                     VariableProfile prof(names, std::vector<int>(static_cast<std::size_t>(m + 1), 4));
                     const auto a = random_series(prof, rng, 12);
                     const auto zm1 = TruncatedSeries::variable(prof, names[static_cast<std::size_t>(m - 2)]);
                     const auto zm = TruncatedSeries::variable(prof, names[static_cast<std::size_t>(m - 1)]);
                     // D over all m+1 variables, then with z_m dropped, then with z_{m-1} dropped.
                     std::vector<std::string> drop_m(names.begin(), names.end());
                     drop_m.erase(drop_m.begin() + (m - 1));
                     std::vector<std::string> drop_m1(names.begin(), names.end());
                     drop_m1.erase(drop_m1.begin() + (m - 2));
                     const auto lhs = (zm1 - zm) * apply_D(m + 1, a);
                     const auto rhs = zm1 * apply_D_reindexed(a, drop_m) - zm * apply_D_reindexed(a, drop_m1);
                     if (!(lhs == rhs)) return "mismatch in trial " + std::to_string(trial) + " (m=" + std::to_string(m) + ")";
                   }
                   return std::string{};
                 }});

  out.push_back({"identities.03.d-closed-form", "D_{z1,z2} f = (f(z2) - z1 f(z1 z2)) / (1 - z1)", "100 random polynomials",
                 [seed] {
                   std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
                   VariableProfile prof({"z1", "z2"}, {10, 10});
                   VariableProfile poly_prof({"z1", "z2"}, {0, 8});
                   const auto z1 = TruncatedSeries::variable(prof, "z1");
                   const auto geometric = invert(TruncatedSeries::constant(prof, 1) - z1);
                   for (int trial = 0; trial < 100; ++trial) {
                     TruncatedSeries f(prof);
                     random_series(poly_prof, rng, 6).for_each_term([&](const Exponents& e, const BigInt& c) { f.add_term(e, c); });
                     const auto lhs = apply_D(2, f);
                     const auto rhs = (f - z1 * scale_variable(f, 1, 0)) * geometric;
                     if (!(lhs == rhs)) return "mismatch in trial " + std::to_string(trial);
                   }
                   return std::string{};
                 }});

  out.push_back({"identities.04.q-derivative", "D_{q,z} z^n equals the q-derivative of z^{n+1}", "n<=8", [] {
                   VariableProfile prof({"z1", "z2"}, {10, 10});
                   for (int n = 0; n <= 8; ++n) {
                     const auto zn = TruncatedSeries::monomial(prof, {0, n});
                     const auto zn1 = TruncatedSeries::monomial(prof, {0, n + 1});
                     if (!(apply_D(2, zn) == q_derivative(zn1, "z2", "z1"))) return "mismatch at n=" + std::to_string(n);
                   }
                   return std::string{};
                 }});
}

// ---- cross ----

void add_cross_checks(std::vector<Check>& out, const VerifyOptions& opt) {
  const int nb = opt.max_balls;
  const Budget budget = opt.budget;
  for (int k = 1; k <= opt.max_capacity; ++k) {
    for (int ell = 1; ell <= opt.max_length; ++ell) {
      const std::string tag = "k" + two_digit(k) + ".l" + two_digit(ell);
      const std::string params = "b<=" + std::to_string(nb) + " k=" + std::to_string(k) + " l=" + std::to_string(ell);
      out.push_back({"cross.01.thm3-transfer." + tag, "operator formula equals transfer matrix", params, [=] {
                       XSeries transfer;
                       for (int b = 0; b <= nb; ++b) transfer.push_back(count_sequences(b, k, ell, budget));
                       return compare("operator formula", gf_thm3(k, ell, nb, budget), "transfer", transfer);
                     }});
      out.push_back({"cross.02.brute-transfer." + tag, "chained enumeration equals transfer matrix", params, [=] {
                       for (int b = 0; b <= nb; ++b) {
                         const BigInt brute = for_each_sequence(b, k, ell, [](const CardSequence&) {}, budget);
                         const BigInt transfer = count_sequences(b, k, ell, budget);
                         if (brute != transfer) {
                           return bkl(b, k, ell) + ": brute " + to_decimal(brute) + " != transfer " + to_decimal(transfer);
                         }
                       }
                       return std::string{};
                     }});
      out.push_back({"cross.03.periodic." + tag, "periodic enumeration equals transfer trace", params, [=] {
                       for (int b = 0; b <= nb; ++b) {
                         std::uint64_t closed = 0;
                         for_each_sequence(
                             b, k, ell,
                             [&](const CardSequence& s) {
                               if (s.cards.front().arrival == s.cards.back().departure) ++closed;
                             },
                             budget);
                         const BigInt trace = count_periodic(b, k, ell, budget);
                         if (BigInt(closed) != trace) {
                           return bkl(b, k, ell) + ": brute " + std::to_string(closed) + " != trace " + to_decimal(trace);
                         }
                       }
                       return std::string{};
                     }});
    }
    const std::string params = "b<=" + std::to_string(nb) + " k=" + std::to_string(k) + " l=1";
    out.push_back({"cross.04.single-card." + two_digit(k), "single-card formulas agree", params, [=] {
                     XSeries transfer;
                     for (int b = 0; b <= nb; ++b) transfer.push_back(count_sequences(b, k, 1, budget));
                     if (auto d = compare("prop1", gf_prop1(k, nb, budget), "transfer", transfer); !d.empty()) return d;
                     if (auto d = compare("thm-l1", expand(gf_thm_l1(k), nb), "transfer", transfer); !d.empty()) return d;
                     return compare("cor-l1", expand(gf_cor_l1(k), nb), "transfer", transfer);
                   }});
  }
  out.push_back({"cross.05.capacity-saturation", "J(b,k,l) = J(b,b,l) for k >= b and monotone in k",
                 "b<=" + std::to_string(nb) + " l<=" + std::to_string(opt.max_length), [=, ml = opt.max_length] {
                   for (int ell = 1; ell <= ml; ++ell) {
                     for (int b = 1; b <= nb; ++b) {
                       BigInt prev = 0;
                       const BigInt saturated = count_sequences(b, b, ell, budget);
                       for (int k = 1; k <= b + 2; ++k) {
                         const BigInt v = count_sequences(b, k, ell, budget);
                         if (v < prev) return bkl(b, k, ell) + ": count decreases in k";
                         if (k >= b && v != saturated) return bkl(b, k, ell) + ": differs from k=b";
                         prev = v;
                       }
                     }
                   }
                   return std::string{};
                 }});
  out.push_back({"cross.06.infinite", "capacity-free counts equal J(b,b,1)", "b<=" + std::to_string(nb), [=] {
                   XSeries saturated;
                   for (int b = 0; b <= nb; ++b) saturated.push_back(count_sequences(b, std::max(b, 1), 1, budget));
                   return compare("infinite", gf_infinite(nb), "transfer", saturated);
                 }});
}

// ---- bijections ----

Card reference_card(std::initializer_list<int> a, std::initializer_list<int> d, std::initializer_list<int> f) {
  return Card{Composition(std::vector<int>(a)), Composition(std::vector<int>(d)), std::vector<int>(f)};
}

void add_bijection_checks(std::vector<Check>& out, const VerifyOptions& opt) {
  const int nb = opt.max_balls;
  const Budget budget = opt.budget;
  for (int k = 1; k <= opt.max_capacity; ++k) {
    out.push_back({"bijections.01.card." + two_digit(k), "card <-> embedding round trip",
                   "b<=" + std::to_string(nb) + " k=" + std::to_string(k), [=] {
                     const XSeries expected = gf_prop1(k, nb, budget);
                     for (int b = 0; b <= nb; ++b) {
                       const auto cards = enumerate_cards(b, k);
                       const auto embeddings = enumerate_embeddings(b, k);
                       if (BigInt(embeddings.size()) != expected[static_cast<std::size_t>(b)]) {
                         return bkl(b, k, 1) + ": " + std::to_string(embeddings.size()) + " embeddings, expected " +
                                to_decimal(expected[static_cast<std::size_t>(b)]);
                       }
                       std::set<Embedding> images;
                       for (const auto& c : cards) {
                         if (!validate_card(c).valid()) return "invalid card " + format_card(c);
                         const auto e = card_to_embedding(c);
                         if (auto v = embedding_violation(e, b, k); !v.empty()) return format_card(c) + " -> " + v;
                         if (!(embedding_to_card(e) == c)) return "round trip fails for " + format_card(c);
                         images.insert(e);
                       }
                       if (images != std::set<Embedding>(embeddings.begin(), embeddings.end())) {
                         return bkl(b, k, 1) + ": card images differ from enumerated embeddings";
                       }
                     }
                     return std::string{};
                   }});
    for (int ell = 1; ell <= opt.max_length; ++ell) {
      out.push_back({"bijections.02.sequence.k" + two_digit(k) + ".l" + two_digit(ell), "card sequence <-> embedding round trip",
                     "b<=" + std::to_string(nb) + " k=" + std::to_string(k) + " l=" + std::to_string(ell), [=] {
                       for (int b = 0; b <= nb; ++b) {
                         std::set<SequenceEmbedding> images;
                         std::string failure;
                         for_each_sequence(
                             b, k, ell,
                             [&](const CardSequence& s) {
                               if (!failure.empty()) return;
                               const auto se = sequence_to_embedding(s);
                               if (auto v = sequence_embedding_violation(se, b, k); !v.empty()) {
                                 failure = bkl(b, k, ell) + ": invalid image " + to_string(se) + ": " + v;
                               } else if (!(embedding_to_sequence(se) == s)) {
                                 failure = bkl(b, k, ell) + ": round trip fails at " + to_string(se);
                               } else {
                                 images.insert(se);
                               }
                             },
                             budget);
                         if (!failure.empty()) return failure;
                         const auto all = enumerate_sequence_embeddings(b, k, ell, budget);
                         if (images != std::set<SequenceEmbedding>(all.begin(), all.end())) {
                           return bkl(b, k, ell) + ": sequence images differ from enumerated embeddings";
                         }
                       }
                       return std::string{};
                     }});
    }
  }
  out.push_back({"bijections.03.reference", "reference cards and sequence map to their known embeddings", "", [] {
                   const Card plain = reference_card({4, 2, 3}, {4, 2, 3}, {1, 2, 3});
                   if (to_string(card_to_embedding(plain)) != "0000|00|000") return std::string("identity card embedding");
                   const Card mixed = reference_card({6, 1, 2, 2}, {3, 1, 2, 3, 2}, {0, 1, 3, 4});
                   if (to_string(card_to_embedding(mixed)) != "011|1|00|001|11") return std::string("mixed card embedding");
                   CardSequence seq{{reference_card({4, 2, 3}, {4, 3, 2}, {0, 1, 2}),
                                     reference_card({4, 3, 2}, {2, 3, 3, 1}, {0, 2, 3}),
                                     reference_card({2, 3, 3, 1}, {2, 3, 3, 1}, {1, 2, 3, 4}),
                                     reference_card({2, 3, 3, 1}, {4, 3, 1, 1}, {0, 1, 2, 3})}};
                   const auto se = sequence_to_embedding(seq);
                   if (to_string(se) != "gamma=0004|112|2|4;delta=0000|0011|e|22") return "sequence embedding " + to_string(se);
                   if (!(embedding_to_sequence(se) == seq)) return std::string("sequence round trip");
                   return std::string{};
                 }});
}

// ---- published sequences ----

void add_oeis_checks(std::vector<Check>& out, const VerifyOptions&) {
  out.push_back({"oeis.01.A370304", "capacity 2 single-card counts", "B=14", [] {
                   const auto expected = from_longs({1, 2, 7, 17, 41, 91, 195, 403, 812, 1601, 3102, 5922, 11165, 20824, 38477});
                   const RationalFunction closed(Polynomial{1, -1, 1, 1}, Polynomial{1, -1, -1}.pow(3));
                   if (!(gf_thm_l1(2) == reduce(closed))) return std::string("closed form differs");
                   if (auto d = compare("thm-l1", expand(gf_thm_l1(2), 14), "published", expected); !d.empty()) return d;
                   return compare("prop1", gf_prop1(2, 14), "published", expected);
                 }});
  out.push_back({"oeis.02.A370306", "capacity 3 single-card counts", "B=13", [] {
                   const auto expected = from_longs({1, 2, 7, 24, 70, 198, 532, 1370, 3418, 8296, 19677, 45770, 104687, 235972});
                   const RationalFunction closed(Polynomial{1, -2, 1, 4, 3, 0, -3, -2, -1}, Polynomial{1, -1, -1, -1}.pow(4));
                   if (!(gf_thm_l1(3) == reduce(closed))) return std::string("closed form differs");
                   if (auto d = compare("thm-l1", expand(gf_thm_l1(3), 13), "published", expected); !d.empty()) return d;
                   return compare("prop1", gf_prop1(3, 13), "published", expected);
                 }});
  out.push_back({"oeis.03.A003480", "capacity-free single-card counts", "B=12", [] {
                   const auto expected = from_longs({1, 2, 7, 24, 82, 280, 956, 3264, 11144, 38048, 129904, 443520, 1514272});
                   if (auto d = compare("rational", gf_infinite(12), "published", expected); !d.empty()) return d;
                   if (auto d = compare("recurrence", gf_infinite_recurrence(12), "published", expected); !d.empty()) return d;
                   const auto rec = fit_recurrence(expected, 4);
                   if (!rec || rec->order() != 2 || rec->coeffs[0] != 4 || rec->coeffs[1] != -2) {
                     return std::string("fitted recurrence is not (4,-2)");
                   }
                   return std::string{};
                 }});
}

}  // namespace

std::vector<CheckResult> run_verification(unsigned suites, const VerifyOptions& options) {
  if (options.max_balls < 0 || options.max_capacity < 1 || options.max_length < 1) {
    throw InvalidArgument("verify needs max-balls >= 0, max-capacity >= 1, max-length >= 1");
  }
  std::vector<Check> checks;
  if (suites & kSuiteIdentities) add_identity_checks(checks, options);
  if (suites & kSuiteCross) add_cross_checks(checks, options);
  if (suites & kSuiteBijections) add_bijection_checks(checks, options);
  if (suites & kSuiteOeis) add_oeis_checks(checks, options);

  std::vector<std::future<CheckResult>> pending;
  pending.reserve(checks.size());
  for (auto& check : checks) {
    pending.push_back(std::async(std::launch::async, [&check] {
      CheckResult r{check.id, check.name, check.params, false, {}};
      try {
        r.detail = check.body();
        r.passed = r.detail.empty();
      } catch (const BudgetExceeded& e) {
        r.detail = std::string("budget exceeded: ") + e.what();
      } catch (const std::exception& e) {
        r.detail = std::string("error: ") + e.what();
      }
      return r;
    }));
  }
  std::vector<CheckResult> results;
  results.reserve(pending.size());
  for (auto& f : pending) results.push_back(f.get());
  std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return results;
}

}  // namespace mjc
