/*
 * C interface to the toricvol library.
 *
 * All objects are opaque handles created by a tv_*_create/parse function and
 * released with the matching tv_*_free. Strings returned through char** out
 * parameters are heap allocated and must be released with tv_string_free.
 * On failure a function returns a nonzero tv_status and tv_last_error()
 * describes the problem; the message is per-thread and valid until the next
 * call into the library from that thread.
 */
#ifndef TORICVOL_H
#define TORICVOL_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(TORICVOL_BUILDING_LIBRARY)
#    define TV_API __declspec(dllexport)
#  else
#    define TV_API __declspec(dllimport)
#  endif
#else
#  define TV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tv_status {
  TV_OK = 0,
  TV_ERR_NULL_ARGUMENT = 1,
  TV_ERR_PARSE = 2,            /* malformed instance document */
  TV_ERR_INVALID_FAN = 3,      /* rays do not form a smooth complete fan */
  TV_ERR_INVALID_ARGUMENT = 4, /* bad index, range, tag or parameter */
  TV_ERR_NOT_GENERATED = 5,    /* divisor is not globally generated */
  TV_ERR_NOT_AMPLE = 6,        /* divisor is not ample */
  TV_ERR_INTERNAL = 7
} tv_status;

typedef enum tv_format { TV_FORMAT_TEXT = 0, TV_FORMAT_JSON = 1, TV_FORMAT_CSV = 2 } tv_format;

typedef struct tv_instance tv_instance;
typedef struct tv_report tv_report;

TV_API const char* tv_version(void);
TV_API const char* tv_last_error(void);
TV_API const char* tv_status_name(tv_status status);
TV_API void tv_string_free(char* s);

/* Instances ---------------------------------------------------------------- */

/* Parses a JSON instance document. The fan is not validated here so that
 * tv_instance_check can report its violations. */
TV_API tv_status tv_instance_parse(const char* text, tv_instance** out);
TV_API tv_status tv_instance_hirzebruch(long long l, long long a, long long b, tv_instance** out);
TV_API void tv_instance_free(tv_instance* inst);

/* Serializes back to the compact document form. */
TV_API tv_status tv_instance_emit(const tv_instance* inst, char** out);

/* Fan validity, global generation and ampleness, as text. *ample is set to 1
 * only for a valid fan with an ample divisor. */
TV_API tv_status tv_instance_check(const tv_instance* inst, int* ample, char** text);

/* Reports -------------------------------------------------------------------- */

/* decomposition: NULL or "default", "successor", "generic-at=K"; NULL uses the
 * document's variant if any. flag_ray/flag_cone < 0 use the document's flag,
 * falling back to (0, 0). A non-ample divisor still yields a report (with
 * tv_report_ample() == 0). */
TV_API tv_status tv_report_compute(const tv_instance* inst, const char* decomposition, int flag_ray, int flag_cone,
                                   tv_report** out);
TV_API void tv_report_free(tv_report* report);
TV_API int tv_report_ample(const tv_report* report);
TV_API int tv_report_agree(const tv_report* report);
TV_API size_t tv_report_contributing_flags(const tv_report* report);

/* Exact values as "p/q" strings. name is one of area_polytope,
 * self_intersection, half_self_intersection, simplex_sum, symbol_sum,
 * symbol_sum_half, lhs_trivialization_area. */
TV_API tv_status tv_report_value(const tv_report* report, const char* name, char** out);
TV_API tv_status tv_report_format(const tv_report* report, tv_format format, char** out);

/* Sweeps and rendering ------------------------------------------------------- */

/* Hirzebruch family sweep over l in [l_lo, l_hi], a in [a_lo, a_hi] and
 * b = l*a + extra for extra in [e_lo, e_hi]; writes the CSV table.
 * *all_agree is 1 iff every row agrees. */
TV_API tv_status tv_sweep_csv(long long l_lo, long long l_hi, long long a_lo, long long a_hi, long long e_lo,
                              long long e_hi, const char* decomposition, char** csv, int* all_agree);

/* SVG of the divisor polytope; with a flag (flag_ray, flag_cone >= 0) the
 * image polygon under the flag valuation is overlaid. */
TV_API tv_status tv_polytope_svg(const tv_instance* inst, int flag_ray, int flag_cone, char** svg);

#ifdef __cplusplus
}
#endif

#endif /* TORICVOL_H */
