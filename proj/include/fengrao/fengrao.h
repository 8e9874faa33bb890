/*
 * fengrao.h - C interface to the Feng-Rao distance library.
 *
 * Objects are opaque handles created by fr_*_create/parse/build functions and
 * released with the matching fr_*_free. Every fallible call returns an
 * fr_status; on failure fr_last_error() holds a message for the calling
 * thread until its next failing call.
 *
 * Functions that return a list write into a caller buffer. *len always
 * receives the full length. Passing buf == NULL queries the length and
 * returns FR_OK; a non-NULL buffer shorter than the list gives
 * FR_ERR_BUFFER_TOO_SMALL and leaves the buffer untouched.
 *
 * Handles are immutable after creation and may be shared between threads.
 */
#ifndef FENGRAO_H
#define FENGRAO_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FENGRAO_BUILDING)
#    define FENGRAO_API __declspec(dllexport)
#  else
#    define FENGRAO_API __declspec(dllimport)
#  endif
#else
#  define FENGRAO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fr_status {
  FR_OK = 0,
  FR_ERR_INVALID_ARGUMENT = 1,
  FR_ERR_PARSE = 2,
  FR_ERR_NOT_MEMBER = 3,
  FR_ERR_NOT_ARF = 4,
  FR_ERR_OVERFLOW = 5,
  FR_ERR_BUFFER_TOO_SMALL = 6,
  FR_ERR_INTERNAL = 7
} fr_status;

typedef enum fr_method {
  FR_METHOD_FAST = 0,    /* Arf recursion; r = 1 or 2, Arf input only */
  FR_METHOD_GENERIC = 1, /* minimum over the finite search set F_r(m) */
  FR_METHOD_ORACLE = 2   /* bounded exhaustive search */
} fr_method;

typedef struct fr_semigroup fr_semigroup;
typedef struct fr_profile fr_profile;

typedef struct fr_semigroup_summary {
  int64_t conductor;
  int64_t multiplicity;
  int64_t genus;
  size_t num_small; /* small elements including 0 and the conductor */
  int is_arf;
} fr_semigroup_summary;

/* One line of a code-bounds table. Distance columns are at m+1 / m+2. */
typedef struct fr_bounds_row {
  int64_t m;
  int64_t delta2_m1;
  int64_t delta1_m1;
  int64_t gob_m1;
  int64_t delta1_m2;
  int64_t glb_m;
} fr_bounds_row;

typedef struct fr_verify_options {
  int64_t max_conductor;
  int r_max;
  int64_t margin;
  unsigned threads; /* 0 means 1 */
} fr_verify_options;

typedef struct fr_verify_report {
  size_t semigroups;
  size_t checks;
  size_t mismatches;
  /* First mismatch, valid when mismatches > 0. */
  fr_semigroup *counterexample; /* owned; release with fr_verify_report_clear */
  int r;
  int64_t m;
  int64_t fast; /* -1 when the Arf recursion does not apply */
  int64_t generic;
  int64_t oracle;
} fr_verify_report;

FENGRAO_API const char *fr_version(void);
FENGRAO_API const char *fr_status_message(fr_status status);
FENGRAO_API const char *fr_last_error(void);

/* Construction. Text forms: gens:.. small:.. mults:.. tower:q=..,n=.. ind:(a,b).. */
FENGRAO_API fr_status fr_semigroup_parse(const char *text, fr_semigroup **out);
FENGRAO_API fr_status fr_semigroup_from_generators(const int64_t *gens, size_t count, fr_semigroup **out);
FENGRAO_API fr_status fr_semigroup_from_small_elements(const int64_t *small, size_t count, fr_semigroup **out);
FENGRAO_API fr_status fr_semigroup_from_multiplicities(const int64_t *d, size_t count, fr_semigroup **out);
FENGRAO_API fr_status fr_semigroup_tower(int64_t q, int64_t n, fr_semigroup **out);
FENGRAO_API fr_status fr_semigroup_translate(const fr_semigroup *s, int64_t m, fr_semigroup **out);
FENGRAO_API void fr_semigroup_free(fr_semigroup *s);

/* Queries. */
FENGRAO_API fr_status fr_semigroup_get_summary(const fr_semigroup *s, fr_semigroup_summary *out);
FENGRAO_API fr_status fr_semigroup_contains(const fr_semigroup *s, int64_t x, int *out);
FENGRAO_API fr_status fr_semigroup_small_elements(const fr_semigroup *s, int64_t *buf, size_t cap, size_t *len);
FENGRAO_API fr_status fr_semigroup_multiplicity_sequence(const fr_semigroup *s, int64_t *buf, size_t cap,
                                                         size_t *len);
FENGRAO_API fr_status fr_semigroup_minimal_generators(const fr_semigroup *s, int64_t *buf, size_t cap, size_t *len);
FENGRAO_API fr_status fr_semigroup_apery(const fr_semigroup *s, int64_t x, int64_t *buf, size_t cap, size_t *len);
FENGRAO_API fr_status fr_semigroup_divisors(const fr_semigroup *s, const int64_t *targets, size_t count,
                                            int64_t *buf, size_t cap, size_t *len);

/* Feng-Rao distances and numbers. */
FENGRAO_API fr_status fr_feng_rao_distance(const fr_semigroup *s, int r, int64_t m, fr_method method,
                                           int64_t *out);
FENGRAO_API fr_status fr_feng_rao_number(const fr_semigroup *s, int r, int64_t *out);
/* E_2 as min |Ap(S, x)| over 1 <= x <= e. */
FENGRAO_API fr_status fr_e2_apery(const fr_semigroup *s, int64_t *out);
/* E_2 from the multiplicity sequence; Arf input only. */
FENGRAO_API fr_status fr_e2_sequence(const fr_semigroup *s, int64_t *out);

/* Arf profiles: delta^1 and delta^2 over every member. */
FENGRAO_API fr_status fr_profile_build(const fr_semigroup *s, fr_profile **out);
FENGRAO_API void fr_profile_free(fr_profile *p);
FENGRAO_API fr_status fr_profile_e2(const fr_profile *p, int64_t *out);
FENGRAO_API fr_status fr_profile_delta(const fr_profile *p, int r, int64_t m, int64_t *out);
FENGRAO_API fr_status fr_profile_goppa_like(const fr_profile *p, int64_t m, int code_level, int64_t *out);

/* Rows for m in [m_lo, m_hi]; the range must lie within [c - 1, 4c]. */
FENGRAO_API fr_status fr_bounds_table(const fr_profile *p, int64_t field_size, int64_t m_lo, int64_t m_hi,
                                      fr_bounds_row *rows, size_t cap, size_t *len);

FENGRAO_API fr_status fr_verify(const fr_verify_options *options, fr_verify_report *out);
FENGRAO_API void fr_verify_report_clear(fr_verify_report *report);

#ifdef __cplusplus
}
#endif

#endif /* FENGRAO_H */
