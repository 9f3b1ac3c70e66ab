// Command-line front end. Talks to the library through the C interface only.
#include <cstdint>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mjc/mjc.h"

namespace {

enum ExitCode { kOk = 0, kFailed = 1, kUsage = 2, kBudget = 3 };

struct ContextDeleter {
  void operator()(mjc_context* c) const { mjc_context_destroy(c); }
};
struct TextDeleter {
  void operator()(mjc_text* t) const { mjc_text_free(t); }
};
struct ListDeleter {
  void operator()(mjc_int_list* l) const { mjc_int_list_free(l); }
};
struct ReportDeleter {
  void operator()(mjc_report* r) const { mjc_report_free(r); }
};
using Text = std::unique_ptr<mjc_text, TextDeleter>;
using List = std::unique_ptr<mjc_int_list, ListDeleter>;
using Report = std::unique_ptr<mjc_report, ReportDeleter>;

// Thrown after the error has been reported; carries the exit code.
struct Exit {
  int code;
};

mjc_context* g_ctx = nullptr;

void check(mjc_status s) {
  if (s == MJC_OK) return;
  std::cerr << "error: " << mjc_status_name(s) << ": " << mjc_last_error(g_ctx) << "\n";
  switch (s) {
    case MJC_INVALID_ARGUMENT:
    case MJC_PARSE_ERROR:
      throw Exit{kUsage};
    case MJC_BUDGET_EXCEEDED:
      throw Exit{kBudget};
    default:
      throw Exit{kFailed};
  }
}

std::vector<std::string> to_strings(const mjc_int_list* l) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < mjc_int_list_size(l); ++i) out.emplace_back(mjc_int_list_get(l, i));
  return out;
}

const std::map<std::string, mjc_method> kMethods = {
    {"brute", MJC_METHOD_BRUTE},   {"transfer", MJC_METHOD_TRANSFER}, {"thm3", MJC_METHOD_THM3},
    {"prop1", MJC_METHOD_PROP1},   {"thm-l1", MJC_METHOD_THM_L1},     {"cor-l1", MJC_METHOD_COR_L1},
    {"infinite", MJC_METHOD_INFINITE},
};

const std::map<std::string, mjc_formula> kFormulas = {
    {"thm-l1", MJC_FORMULA_THM_L1}, {"cor-l1", MJC_FORMULA_COR_L1}, {"infinite", MJC_FORMULA_INFINITE}};

const std::map<std::string, unsigned> kSuites = {
    {"identities", MJC_SUITE_IDENTITIES}, {"cross", MJC_SUITE_CROSS}, {"bijections", MJC_SUITE_BIJECTIONS},
    {"oeis", MJC_SUITE_OEIS},             {"all", MJC_SUITE_ALL}};

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

struct CountArgs {
  int balls = 0, capacity = 1, length = 1;
  std::string method;
  bool periodic = false, json = false;
};

int run_count(const CountArgs& a) {
  Text out;
  mjc_text* raw = nullptr;
  check(mjc_count(g_ctx, a.balls, a.capacity, a.length, kMethods.at(a.method), a.periodic ? 1 : 0, &raw));
  out.reset(raw);
  if (a.json) {
    nlohmann::json j = {{"b", a.balls}, {"k", a.capacity}, {"l", a.length}, {"method", a.method}, {"count", mjc_text_get(out.get())}};
    if (a.periodic) j["periodic"] = true;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << mjc_text_get(out.get()) << "\n";
  }
  return kOk;
}

struct SeriesArgs {
  int capacity = 1, length = 1, order = 20;
  std::string methods = "transfer";
  std::string format = "json";
};

int run_series(const SeriesArgs& a) {
  const auto names = split_commas(a.methods);
  if (names.empty()) {
    std::cerr << "error: no method given\n";
    return kUsage;
  }
  for (const auto& name : names) {
    if (!kMethods.count(name)) {
      std::cerr << "error: unknown method '" << name << "'\n";
      return kUsage;
    }
  }
  std::vector<std::vector<std::string>> columns;
  for (const auto& name : names) {
    mjc_int_list* raw = nullptr;
    check(mjc_series(g_ctx, a.capacity, a.length, a.order, kMethods.at(name), &raw));
    List l(raw);
    columns.push_back(to_strings(l.get()));
  }
  if (a.format == "csv") {
    std::cout << "b";
    for (const auto& n : names) std::cout << "," << n;
    std::cout << "\n";
    for (int b = 0; b <= a.order; ++b) {
      std::cout << b;
      for (const auto& c : columns) std::cout << "," << c[static_cast<std::size_t>(b)];
      std::cout << "\n";
    }
  } else {
    nlohmann::json series = nlohmann::json::object();
    for (std::size_t i = 0; i < names.size(); ++i) series[names[i]] = columns[i];
    std::cout << nlohmann::json{{"k", a.capacity}, {"l", a.length}, {"order", a.order}, {"series", series}}.dump() << "\n";
  }
  for (std::size_t i = 1; i < columns.size(); ++i) {
    if (columns[i] != columns[0]) {
      std::cerr << "methods " << names[0] << " and " << names[i] << " disagree\n";
      return kFailed;
    }
  }
  return kOk;
}

int run_genfun(int capacity, const std::string& formula) {
  mjc_int_list* num = nullptr;
  mjc_int_list* den = nullptr;
  check(mjc_genfun(g_ctx, capacity, kFormulas.at(formula), &num, &den));
  List n(num), d(den);
  nlohmann::json j = {{"formula", formula}, {"numerator", to_strings(num)}, {"denominator", to_strings(den)}};
  if (formula != "infinite") j["k"] = capacity;
  std::cout << j.dump() << "\n";
  return kOk;
}

struct VerifyArgs {
  std::string suite = "all";
  int max_balls = 6, max_capacity = 2, max_length = 3;
  bool json = false;
};

int run_verify(const VerifyArgs& a) {
  mjc_report* raw = nullptr;
  check(mjc_verify(g_ctx, kSuites.at(a.suite), a.max_balls, a.max_capacity, a.max_length, &raw));
  Report r(raw);
  const std::size_t n = mjc_report_size(raw);
  const std::size_t failures = mjc_report_failures(raw);
  if (a.json) {
    nlohmann::json checks = nlohmann::json::array();
    for (std::size_t i = 0; i < n; ++i) {
      checks.push_back({{"id", mjc_report_id(raw, i)},
                        {"name", mjc_report_name(raw, i)},
                        {"params", mjc_report_params(raw, i)},
                        {"passed", mjc_report_passed(raw, i) != 0},
                        {"detail", mjc_report_detail(raw, i)}});
    }
    std::cout << nlohmann::json{{"checks", checks}, {"total", n}, {"failed", failures}}.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const bool ok = mjc_report_passed(raw, i) != 0;
      std::cout << (ok ? "PASS " : "FAIL ") << mjc_report_id(raw, i) << "  " << mjc_report_name(raw, i);
      const std::string params = mjc_report_params(raw, i);
      if (!params.empty()) std::cout << " (" << params << ")";
      if (!ok) std::cout << ": " << mjc_report_detail(raw, i);
      std::cout << "\n";
    }
    std::cout << (n - failures) << "/" << n << " checks passed\n";
  }
  if (failures == 0) return kOk;
  return mjc_report_budget_exceeded(raw) ? kBudget : kFailed;
}

// Takes the out-parameter by address: the call filling it must be sequenced first.
int print_text(mjc_status s, mjc_text* const* out) {
  check(s);
  mjc_text* raw = *out;
  Text t(raw);
  std::string v = mjc_text_get(raw);
  std::cout << v;
  if (v.empty() || v.back() != '\n') std::cout << "\n";
  return kOk;
}

int run_fit(const std::string& sequence, int max_order) {
  mjc_text* raw = nullptr;
  check(mjc_fit(g_ctx, sequence.c_str(), max_order, &raw));
  if (!raw) {
    std::cout << "null\n";
    std::cerr << "no recurrence of order <= " << max_order << " fits\n";
    return kFailed;
  }
  return print_text(MJC_OK, &raw);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiplex juggling card counts, embeddings and generating functions"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t max_states = 2000, max_items = 5'000'000, max_monomials = 4'000'000;
  app.add_option("--max-states", max_states, "Largest transfer-matrix dimension")->capture_default_str();
  app.add_option("--max-items", max_items, "Most objects an enumeration may visit")->capture_default_str();
  app.add_option("--max-monomials", max_monomials, "Largest truncation box for a series")->capture_default_str();

  std::vector<std::string> method_names;
  for (const auto& [name, _] : kMethods) method_names.push_back(name);

  CountArgs count;
  auto* c = app.add_subcommand("count", "Count card sequences J(b,k,l)");
  c->add_option("--balls", count.balls)->required()->check(CLI::NonNegativeNumber);
  c->add_option("--capacity", count.capacity)->required();
  c->add_option("--length", count.length)->default_val(1);
  c->add_option("--method", count.method)->required()->check(CLI::IsMember(method_names));
  c->add_flag("--periodic", count.periodic, "Only sequences whose last departure equals the first arrival");
  c->add_flag("--json", count.json);

  SeriesArgs series;
  auto* s = app.add_subcommand("series", "J(0..B,k,l), one column per method");
  s->add_option("--capacity", series.capacity)->required();
  s->add_option("--length", series.length)->default_val(1);
  s->add_option("--order", series.order, "Largest ball count B")->default_val(20);
  s->add_option("--method", series.methods, "Method or comma separated methods")->default_val("transfer");
  s->add_option("--format", series.format)->default_val("json")->check(CLI::IsMember({"json", "csv"}));

  int gf_capacity = 1;
  std::string formula;
  auto* g = app.add_subcommand("genfun", "Reduced rational generating function for single cards");
  g->add_option("--capacity", gf_capacity)->default_val(1);
  g->add_option("--formula", formula)->required()->check(CLI::IsMember({"thm-l1", "cor-l1", "infinite"}));

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run consistency checks");
  v->add_option("--suite", verify.suite)->default_val("all")->check(
      CLI::IsMember({"identities", "cross", "bijections", "oeis", "all"}));
  v->add_option("--max-balls", verify.max_balls)->default_val(6);
  v->add_option("--max-capacity", verify.max_capacity)->default_val(2);
  v->add_option("--max-length", verify.max_length)->default_val(3);
  v->add_flag("--json", verify.json);

  std::string card_text;
  auto* d = app.add_subcommand("draw", "ASCII picture of a card");
  d->add_option("--card", card_text, "arrival=..;departure=..;f=..")->required();

  std::string fit_sequence;
  int max_order = 16;
  auto* f = app.add_subcommand("fit", "Find a linear recurrence for an integer sequence");
  f->add_option("--sequence", fit_sequence, "a0,a1,...")->required();
  f->add_option("--max-order", max_order)->default_val(16);

  int m_balls = 0, m_capacity = 1;
  auto* m = app.add_subcommand("matrix", "Transfer matrix between ball states as JSON");
  m->add_option("--balls", m_balls)->required();
  m->add_option("--capacity", m_capacity)->required();

  std::string embed_card, embed_sequence;
  auto* e = app.add_subcommand("embed", "Card or card sequence to its embedding");
  auto* e_card = e->add_option("--card", embed_card);
  auto* e_seq = e->add_option("--sequence", embed_sequence, "cards separated by ' / '");
  e_card->excludes(e_seq);
  e->require_option(1);

  std::string unembed_text, unembed_seq;
  auto* u = app.add_subcommand("unembed", "Embedding back to its card or card sequence");
  auto* u_emb = u->add_option("--embedding", unembed_text, "words joined by '|'");
  auto* u_seq = u->add_option("--sequence-embedding", unembed_seq, "gamma=..;delta=..");
  u_emb->excludes(u_seq);
  u->require_option(1);

  int i_capacity = 1, i_length = 1, i_order = 4;
  auto* in = app.add_subcommand("integrand", "Truncated multivariate series behind the operator formula, as JSON");
  in->add_option("--capacity", i_capacity)->required();
  in->add_option("--length", i_length)->required();
  in->add_option("--order", i_order)->default_val(4);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForAllHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kUsage;
  }

  mjc_context* raw_ctx = nullptr;
  if (mjc_context_create(&raw_ctx) != MJC_OK) return kFailed;
  std::unique_ptr<mjc_context, ContextDeleter> ctx(raw_ctx);
  g_ctx = raw_ctx;

  try {
    check(mjc_set_budget(g_ctx, max_states, max_items, max_monomials));
    if (*c) return run_count(count);
    if (*s) return run_series(series);
    if (*g) return run_genfun(gf_capacity, formula);
    if (*v) return run_verify(verify);
    if (*f) return run_fit(fit_sequence, max_order);
    mjc_text* out = nullptr;
    if (*d) return print_text(mjc_draw_card(g_ctx, card_text.c_str(), &out), &out);
    if (*m) return print_text(mjc_transfer_matrix_json(g_ctx, m_balls, m_capacity, &out), &out);
    if (*e) {
      if (*e_card) return print_text(mjc_card_to_embedding(g_ctx, embed_card.c_str(), &out), &out);
      return print_text(mjc_sequence_to_embedding(g_ctx, embed_sequence.c_str(), &out), &out);
    }
    if (*u) {
      if (*u_emb) return print_text(mjc_embedding_to_card(g_ctx, unembed_text.c_str(), &out), &out);
      return print_text(mjc_embedding_to_sequence(g_ctx, unembed_seq.c_str(), &out), &out);
    }
    if (*in) return print_text(mjc_integrand_json(g_ctx, i_capacity, i_length, i_order, &out), &out);
  } catch (const Exit& x) {
    return x.code;
  }
  return kUsage;
}
