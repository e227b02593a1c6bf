/* C interface to the locoh local cohomology engine.
 *
 * Every function returns a status code and writes results through out
 * pointers.  Problems are opaque handles; strings returned by the library
 * must be released with locoh_string_free.
 */

#ifndef LOCOH_H
#define LOCOH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define LOCOH_OK 0
#define LOCOH_ERR_INPUT 2
#define LOCOH_ERR_MISMATCH 3
#define LOCOH_ERR_NULL 5
#define LOCOH_ERR_INTERNAL 6

typedef struct LocohProblem LocohProblem;

/* Parses a JSON problem description:
 *   {"x_vars": [...], "y_vars": [...],
 *    "generators": [{"x": [...], "y": [...]}, ...],
 *    "field": {"kind": "rationals"} | {"kind": "prime", "p": 5}}   (optional)
 */
int32_t locoh_problem_parse(const char *json, LocohProblem **out);

/* Releases a problem handle.  Accepts NULL. */
void locoh_problem_free(LocohProblem *p);

/* Number of y variables (the valid cohomology indices are 0..n). */
int32_t locoh_y_count(const LocohProblem *p, size_t *out);

/* Dimension of the fine (a, b) component of H^i_P(R).
 * a_len and b_len must match the variable counts of the problem. */
int32_t locoh_component_dim(const LocohProblem *p, int64_t i,
                            const int64_t *a, size_t a_len,
                            const int64_t *b, size_t b_len,
                            int64_t *out);

/* Hilbert series of H^i_P(R) as JSON (schema "locoh/1").
 * coarse != 0 regrades to the coarse (s, t) bigrading.
 * The string written to *out must be freed with locoh_string_free. */
int32_t locoh_series_json(const LocohProblem *p, int64_t i, int32_t coarse,
                          char **out);

/* Tameness report for index i as JSON.
 * The string written to *out must be freed with locoh_string_free. */
int32_t locoh_tameness_json(const LocohProblem *p, int64_t i, char **out);

/* Verifies the series against the Cech strand oracle over the box
 * a in [0, sigma + a_pad]^m, b in [b_min, rho]^n for every i.
 * Returns LOCOH_OK or LOCOH_ERR_MISMATCH. */
int32_t locoh_check_box(const LocohProblem *p, int64_t a_pad, int64_t b_min);

/* Releases a string returned by this library.  Accepts NULL. */
void locoh_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif /* LOCOH_H */
