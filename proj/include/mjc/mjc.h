/* C interface to the multiplex juggling card library.
 *
 * Every function returns an mjc_status. On failure the context keeps a
 * message retrievable with mjc_last_error until the next call on it. Results
 * come back as opaque handles owned by the caller; free them with the
 * matching *_free function. Big integers cross the boundary as decimal
 * strings. A context must not be used from two threads at once.
 */
#ifndef MJC_MJC_H
#define MJC_MJC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(MJC_BUILDING_LIBRARY)
#define MJC_API __declspec(dllexport)
#else
#define MJC_API __declspec(dllimport)
#endif
#else
#define MJC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mjc_status {
  MJC_OK = 0,
  MJC_INVALID_ARGUMENT = 1,
  MJC_PARSE_ERROR = 2,
  MJC_BUDGET_EXCEEDED = 3,
  MJC_INTERNAL_ERROR = 4
} mjc_status;

typedef enum mjc_method {
  MJC_METHOD_BRUTE = 0,
  MJC_METHOD_TRANSFER = 1,
  MJC_METHOD_THM3 = 2,
  MJC_METHOD_PROP1 = 3,
  MJC_METHOD_THM_L1 = 4,
  MJC_METHOD_COR_L1 = 5,
  MJC_METHOD_INFINITE = 6
} mjc_method;

typedef enum mjc_formula {
  MJC_FORMULA_THM_L1 = 0,
  MJC_FORMULA_COR_L1 = 1,
  MJC_FORMULA_INFINITE = 2
} mjc_formula;

enum {
  MJC_SUITE_IDENTITIES = 1,
  MJC_SUITE_CROSS = 2,
  MJC_SUITE_BIJECTIONS = 4,
  MJC_SUITE_OEIS = 8,
  MJC_SUITE_ALL = 15
};

typedef struct mjc_context mjc_context;
/* A list of big integers. */
typedef struct mjc_int_list mjc_int_list;
/* An owned string. */
typedef struct mjc_text mjc_text;
/* Results of a verification run. */
typedef struct mjc_report mjc_report;

MJC_API const char* mjc_version(void);
MJC_API const char* mjc_status_name(int status);

MJC_API mjc_status mjc_context_create(mjc_context** out);
MJC_API void mjc_context_destroy(mjc_context* ctx);
MJC_API const char* mjc_last_error(const mjc_context* ctx);

/* Zero leaves a limit unchanged. */
MJC_API mjc_status mjc_set_budget(mjc_context* ctx, uint64_t max_states, uint64_t max_items, uint64_t max_monomials);

MJC_API size_t mjc_int_list_size(const mjc_int_list* list);
/* Decimal string of entry i, valid until the list is freed; NULL when out of range. */
MJC_API const char* mjc_int_list_get(const mjc_int_list* list, size_t i);
MJC_API void mjc_int_list_free(mjc_int_list* list);

MJC_API const char* mjc_text_get(const mjc_text* text);
MJC_API void mjc_text_free(mjc_text* text);

/* Method and formula selectors are passed as int and range-checked. */

/* J(b,k,l) by the chosen mjc_method; periodic != 0 counts closed sequences. */
MJC_API mjc_status mjc_count(mjc_context* ctx, int b, int k, int ell, int method, int periodic, mjc_text** out);

/* J(0..order, k, l) by the chosen mjc_method. */
MJC_API mjc_status mjc_series(mjc_context* ctx, int k, int ell, int order, int method, mjc_int_list** out);

/* Reduced rational generating function; numerator and denominator ascending in x. */
MJC_API mjc_status mjc_genfun(mjc_context* ctx, int k, int formula, mjc_int_list** numerator,
                              mjc_int_list** denominator);

/* Comma separated integers in, recurrence JSON out. MJC_OK with *out == NULL
 * means no recurrence up to max_order was found. */
MJC_API mjc_status mjc_fit(mjc_context* ctx, const char* sequence, int max_order, mjc_text** out);

MJC_API mjc_status mjc_draw_card(mjc_context* ctx, const char* card, mjc_text** out);
MJC_API mjc_status mjc_card_to_embedding(mjc_context* ctx, const char* card, mjc_text** out);
MJC_API mjc_status mjc_embedding_to_card(mjc_context* ctx, const char* embedding, mjc_text** out);
/* Cards separated by newlines or ' / '. */
MJC_API mjc_status mjc_sequence_to_embedding(mjc_context* ctx, const char* cards, mjc_text** out);
/* Result has one card per line. */
MJC_API mjc_status mjc_embedding_to_sequence(mjc_context* ctx, const char* sequence_embedding, mjc_text** out);

MJC_API mjc_status mjc_transfer_matrix_json(mjc_context* ctx, int b, int k, mjc_text** out);
/* The operator-formula integrand as JSON terms. */
MJC_API mjc_status mjc_integrand_json(mjc_context* ctx, int k, int ell, int order, mjc_text** out);

MJC_API mjc_status mjc_verify(mjc_context* ctx, unsigned suites, int max_balls, int max_capacity, int max_length,
                              mjc_report** out);
MJC_API size_t mjc_report_size(const mjc_report* report);
MJC_API size_t mjc_report_failures(const mjc_report* report);
/* Nonzero when some check ran out of budget. */
MJC_API int mjc_report_budget_exceeded(const mjc_report* report);
MJC_API const char* mjc_report_id(const mjc_report* report, size_t i);
MJC_API const char* mjc_report_name(const mjc_report* report, size_t i);
MJC_API const char* mjc_report_params(const mjc_report* report, size_t i);
MJC_API int mjc_report_passed(const mjc_report* report, size_t i);
MJC_API const char* mjc_report_detail(const mjc_report* report, size_t i);
MJC_API void mjc_report_free(mjc_report* report);

#ifdef __cplusplus
}
#endif

#endif
