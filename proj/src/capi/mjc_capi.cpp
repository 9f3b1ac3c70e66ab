#include "mjc/mjc.h"

#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "mjc/cards.hpp"
#include "mjc/embeddings.hpp"
#include "mjc/errors.hpp"
#include "mjc/genfun.hpp"
#include "mjc/rational.hpp"
#include "mjc/sequences.hpp"
#include "mjc/verify.hpp"
#include "../core/text_util.hpp"

struct mjc_context {
  mjc::Budget budget;
  std::string error;
};

struct mjc_int_list {
  std::vector<std::string> values;
};

struct mjc_text {
  std::string value;
};

struct mjc_report {
  std::vector<mjc::CheckResult> results;
};

namespace {

using mjc::BigInt;
using mjc::InvalidArgument;
using mjc::XSeries;

template <class F>
mjc_status guarded(mjc_context* ctx, F&& body) {
  if (!ctx) return MJC_INVALID_ARGUMENT;
  ctx->error.clear();
  try {
    body();
    return MJC_OK;
  } catch (const mjc::ParseError& e) {
    ctx->error = e.what();
    return MJC_PARSE_ERROR;
  } catch (const mjc::BudgetExceeded& e) {
    ctx->error = e.what();
    return MJC_BUDGET_EXCEEDED;
  } catch (const std::invalid_argument& e) {
    ctx->error = e.what();
    return MJC_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    ctx->error = "out of memory";
    return MJC_BUDGET_EXCEEDED;
  } catch (const std::exception& e) {
    ctx->error = e.what();
    return MJC_INTERNAL_ERROR;
  }
}

template <class T>
void require_out(T** out) {
  if (!out) throw InvalidArgument("output pointer is null");
  *out = nullptr;
}

std::string require_text(const char* s, const char* what) {
  if (!s) throw InvalidArgument(std::string(what) + " is null");
  return s;
}

mjc_text* make_text(std::string s) { return new mjc_text{std::move(s)}; }

mjc_int_list* make_list(const XSeries& s) {
  auto* out = new mjc_int_list;
  out->values = mjc::to_decimal_strings(s);
  return out;
}

void check_shape(int b, int k, int ell) {
  if (b < 0) throw InvalidArgument("balls must be >= 0");
  if (k < 1) throw InvalidArgument("capacity must be >= 1");
  if (ell < 1) throw InvalidArgument("length must be >= 1");
}

mjc_method to_method(int method) {
  if (method < MJC_METHOD_BRUTE || method > MJC_METHOD_INFINITE) throw InvalidArgument("unknown method");
  return static_cast<mjc_method>(method);
}

void check_method(mjc_method method, int max_b, int k, int ell, int periodic) {
  switch (method) {
    case MJC_METHOD_BRUTE:
    case MJC_METHOD_TRANSFER:
      return;
    case MJC_METHOD_THM3:
      break;
    case MJC_METHOD_PROP1:
    case MJC_METHOD_THM_L1:
    case MJC_METHOD_COR_L1:
      if (ell != 1) throw InvalidArgument("this method counts single cards; it needs length 1");
      break;
    case MJC_METHOD_INFINITE:
      if (ell != 1) throw InvalidArgument("this method counts single cards; it needs length 1");
      if (k < max_b) throw InvalidArgument("the capacity-free count needs capacity >= balls");
      break;
    default:
      throw InvalidArgument("unknown method");
  }
  if (periodic) throw InvalidArgument("periodic counts need the brute or transfer method");
}

BigInt brute_count(int b, int k, int ell, bool periodic, const mjc::Budget& budget) {
  std::uint64_t n = 0;
  mjc::for_each_sequence(
      b, k, ell,
      [&](const mjc::CardSequence& s) {
        if (!periodic || s.cards.front().arrival == s.cards.back().departure) ++n;
      },
      budget);
  return BigInt(n);
}

// J(0..order, k, ell) by a formula method.
XSeries formula_series(mjc_method method, int k, int ell, int order, const mjc::Budget& budget) {
  switch (method) {
    case MJC_METHOD_THM3:
      return mjc::gf_thm3(k, ell, order, budget);
    case MJC_METHOD_PROP1:
      return mjc::gf_prop1(k, order, budget);
    case MJC_METHOD_THM_L1:
      return mjc::expand(mjc::gf_thm_l1(k), order);
    case MJC_METHOD_COR_L1:
      return mjc::expand(mjc::gf_cor_l1(k), order);
    case MJC_METHOD_INFINITE:
      return mjc::gf_infinite(order);
    default:
      throw InvalidArgument("not a formula method");
  }
}

BigInt count_one(int b, int k, int ell, mjc_method method, bool periodic, const mjc::Budget& budget) {
  if (method == MJC_METHOD_BRUTE) return brute_count(b, k, ell, periodic, budget);
  if (method == MJC_METHOD_TRANSFER) {
    return periodic ? mjc::count_periodic(b, k, ell, budget) : mjc::count_sequences(b, k, ell, budget);
  }
  return formula_series(method, k, ell, b, budget).back();
}

std::vector<std::string> split_cards(const std::string& text) {
  std::string normalized = text;
  for (char& c : normalized) {
    if (c == '/') c = '\n';
  }
  std::vector<std::string> out;
  for (const auto& line : mjc::detail::split(normalized, '\n')) {
    const auto t = mjc::detail::trim(line);
    if (!t.empty()) out.emplace_back(t);
  }
  return out;
}

}  // namespace

extern "C" {

const char* mjc_version(void) { return "0.1.0"; }

const char* mjc_status_name(int status) {
  switch (status) {
    case MJC_OK:
      return "ok";
    case MJC_INVALID_ARGUMENT:
      return "invalid argument";
    case MJC_PARSE_ERROR:
      return "parse error";
    case MJC_BUDGET_EXCEEDED:
      return "budget exceeded";
    case MJC_INTERNAL_ERROR:
      return "internal error";
  }
  return "unknown status";
}

mjc_status mjc_context_create(mjc_context** out) {
  if (!out) return MJC_INVALID_ARGUMENT;
  *out = new (std::nothrow) mjc_context;
  return *out ? MJC_OK : MJC_INTERNAL_ERROR;
}

void mjc_context_destroy(mjc_context* ctx) { delete ctx; }

const char* mjc_last_error(const mjc_context* ctx) { return ctx ? ctx->error.c_str() : "null context"; }

mjc_status mjc_set_budget(mjc_context* ctx, uint64_t max_states, uint64_t max_items, uint64_t max_monomials) {
  return guarded(ctx, [&] {
    if (max_states) ctx->budget.max_states = max_states;
    if (max_items) ctx->budget.max_items = max_items;
    if (max_monomials) ctx->budget.max_monomials = max_monomials;
  });
}

size_t mjc_int_list_size(const mjc_int_list* list) { return list ? list->values.size() : 0; }

const char* mjc_int_list_get(const mjc_int_list* list, size_t i) {
  if (!list || i >= list->values.size()) return nullptr;
  return list->values[i].c_str();
}

void mjc_int_list_free(mjc_int_list* list) { delete list; }

const char* mjc_text_get(const mjc_text* text) { return text ? text->value.c_str() : nullptr; }

void mjc_text_free(mjc_text* text) { delete text; }

mjc_status mjc_count(mjc_context* ctx, int b, int k, int ell, int method_id, int periodic, mjc_text** out) {
  return guarded(ctx, [&] {
    require_out(out);
    const mjc_method method = to_method(method_id);
    check_shape(b, k, ell);
    check_method(method, b, k, ell, periodic);
    *out = make_text(mjc::to_decimal(count_one(b, k, ell, method, periodic != 0, ctx->budget)));
  });
}

mjc_status mjc_series(mjc_context* ctx, int k, int ell, int order, int method_id, mjc_int_list** out) {
  return guarded(ctx, [&] {
    require_out(out);
    const mjc_method method = to_method(method_id);
    check_shape(order, k, ell);
    check_method(method, order, k, ell, 0);
    XSeries s;
    if (method == MJC_METHOD_BRUTE || method == MJC_METHOD_TRANSFER) {
      for (int b = 0; b <= order; ++b) s.push_back(count_one(b, k, ell, method, false, ctx->budget));
    } else {
      s = formula_series(method, k, ell, order, ctx->budget);
    }
    *out = make_list(s);
  });
}

mjc_status mjc_genfun(mjc_context* ctx, int k, int formula, mjc_int_list** numerator,
                      mjc_int_list** denominator) {
  return guarded(ctx, [&] {
    require_out(numerator);
    require_out(denominator);
    std::optional<mjc::RationalFunction> rf;
    switch (formula) {
      case MJC_FORMULA_THM_L1:
        if (k < 1) throw InvalidArgument("capacity must be >= 1");
        rf = mjc::gf_thm_l1(k);
        break;
      case MJC_FORMULA_COR_L1:
        if (k < 1) throw InvalidArgument("capacity must be >= 1");
        rf = mjc::gf_cor_l1(k);
        break;
      case MJC_FORMULA_INFINITE:
        rf = mjc::gf_infinite_rational();
        break;
      default:
        throw InvalidArgument("unknown formula");
    }
    auto num = std::unique_ptr<mjc_int_list>(make_list(rf->numerator().coefficients()));
    *denominator = make_list(rf->denominator().coefficients());
    *numerator = num.release();
  });
}

mjc_status mjc_fit(mjc_context* ctx, const char* sequence, int max_order, mjc_text** out) {
  return guarded(ctx, [&] {
    require_out(out);
    if (max_order < 0) throw InvalidArgument("max order must be >= 0");
    const std::string text = require_text(sequence, "sequence");
    XSeries seq;
    for (const auto& field : mjc::detail::split(text, ',')) {
      const auto t = mjc::detail::trim(field);
      if (t.empty()) throw mjc::ParseError("empty entry in sequence");
      try {
        seq.emplace_back(std::string(t));
      } catch (const std::exception&) {
        throw mjc::ParseError("not an integer: '" + std::string(t) + "'");
      }
    }
    if (auto rec = mjc::fit_recurrence(seq, max_order)) *out = make_text(rec->to_json().dump());
  });
}

mjc_status mjc_draw_card(mjc_context* ctx, const char* card, mjc_text** out) {
  return guarded(ctx, [&] {
    require_out(out);
    *out = make_text(mjc::render_card(mjc::parse_card(require_text(card, "card"))));
  });
}

mjc_status mjc_card_to_embedding(mjc_context* ctx, const char* card, mjc_text** out) {
  return guarded(ctx, [&] {
    require_out(out);
    *out = make_text(mjc::to_string(mjc::card_to_embedding(mjc::parse_card(require_text(card, "card")))));
  });
}

mjc_status mjc_embedding_to_card(mjc_context* ctx, const char* embedding, mjc_text** out) {
  return guarded(ctx, [&] {
    require_out(out);
    *out = make_text(mjc::format_card(mjc::embedding_to_card(mjc::parse_embedding(require_text(embedding, "embedding")))));
  });
}

mjc_status mjc_sequence_to_embedding(mjc_context* ctx, const char* cards, mjc_text** out) {
  return guarded(ctx, [&] {
    require_out(out);
    mjc::CardSequence seq;
    for (const auto& c : split_cards(require_text(cards, "cards"))) seq.cards.push_back(mjc::parse_card(c));
    if (seq.cards.empty()) throw InvalidArgument("no cards given");
    *out = make_text(mjc::to_string(mjc::sequence_to_embedding(seq)));
  });
}

mjc_status mjc_embedding_to_sequence(mjc_context* ctx, const char* sequence_embedding, mjc_text** out) {
  return guarded(ctx, [&] {
    require_out(out);
    const auto seq = mjc::embedding_to_sequence(mjc::parse_sequence_embedding(require_text(sequence_embedding, "embedding")));
    std::string text;
    for (const auto& c : seq.cards) text += mjc::format_card(c) + "\n";
    *out = make_text(std::move(text));
  });
}

mjc_status mjc_transfer_matrix_json(mjc_context* ctx, int b, int k, mjc_text** out) {
  return guarded(ctx, [&] {
    require_out(out);
    check_shape(b, k, 1);
    *out = make_text(mjc::build_transfer_matrix(b, k, ctx->budget).to_json().dump());
  });
}

mjc_status mjc_integrand_json(mjc_context* ctx, int k, int ell, int order, mjc_text** out) {
  return guarded(ctx, [&] {
    require_out(out);
    check_shape(order, k, ell);
    *out = make_text(mjc::thm3_integrand(k, ell, order, ctx->budget).to_json().dump());
  });
}

mjc_status mjc_verify(mjc_context* ctx, unsigned suites, int max_balls, int max_capacity, int max_length,
                      mjc_report** out) {
  return guarded(ctx, [&] {
    require_out(out);
    if (suites == 0 || (suites & ~static_cast<unsigned>(MJC_SUITE_ALL))) throw InvalidArgument("bad suite mask");
    mjc::VerifyOptions options;
    options.max_balls = max_balls;
    options.max_capacity = max_capacity;
    options.max_length = max_length;
    options.budget = ctx->budget;
    *out = new mjc_report{mjc::run_verification(suites, options)};
  });
}

size_t mjc_report_size(const mjc_report* report) { return report ? report->results.size() : 0; }

size_t mjc_report_failures(const mjc_report* report) {
  if (!report) return 0;
  size_t n = 0;
  for (const auto& r : report->results) n += r.passed ? 0 : 1;
  return n;
}

int mjc_report_budget_exceeded(const mjc_report* report) {
  if (!report) return 0;
  for (const auto& r : report->results) {
    if (r.detail.rfind("budget exceeded", 0) == 0) return 1;
  }
  return 0;
}

#define MJC_REPORT_FIELD(fn, field)                                       \
  const char* fn(const mjc_report* report, size_t i) {                    \
    if (!report || i >= report->results.size()) return nullptr;           \
    return report->results[i].field.c_str();                              \
  }

MJC_REPORT_FIELD(mjc_report_id, id)
MJC_REPORT_FIELD(mjc_report_name, name)
MJC_REPORT_FIELD(mjc_report_params, params)
MJC_REPORT_FIELD(mjc_report_detail, detail)

#undef MJC_REPORT_FIELD

int mjc_report_passed(const mjc_report* report, size_t i) {
  if (!report || i >= report->results.size()) return 0;
  return report->results[i].passed ? 1 : 0;
}

void mjc_report_free(mjc_report* report) { delete report; }

}  // extern "C"
