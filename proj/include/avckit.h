/* avckit — analysis of jammed binary channels with receive diversity.
 *
 * C interface to the avckit shared library. All functions return a status
 * code; results are written through out-parameters. Channel families are
 * held behind opaque handles. Strings returned through `char**` are owned
 * by the caller and must be released with avck_string_free().
 *
 * Thread safety: handles are immutable after construction and may be shared
 * across threads; the error message buffer is thread-local.
 */

#ifndef AVCKIT_H
#define AVCKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define AVCK_API __declspec(dllexport)
#else
#define AVCK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum avck_status {
  AVCK_OK = 0,
  AVCK_ERR_INVALID_ARGUMENT = 1, /* bad handle, dimension mismatch, bad value */
  AVCK_ERR_PARSE = 2,            /* malformed spec document */
  AVCK_ERR_NUMERIC = 3,          /* solver failed to converge */
  AVCK_ERR_NOMEM = 4
} avck_status;

/* An arbitrarily varying channel (a finite family of channels indexed by the
 * jammer's state). Built either directly from BSC parameters or from a JSON
 * spec describing a composite. */
typedef struct avck_avc avck_avc;

/* Human-readable detail for the most recent failure on this thread. */
AVCK_API const char* avck_last_error(void);

/* Short description of a status code. */
AVCK_API const char* avck_status_name(avck_status status);

AVCK_API void avck_string_free(char* text);

/* --- construction -------------------------------------------------------- */

/* AVC whose states are BSCs with the given parameters (all in [0,1]). */
AVCK_API avck_status avck_avc_create_bsc(const double* params, size_t num_states,
                                         avck_avc** out);

/* Builds the composite described by a JSON spec document:
 *   {"components": [{"type": "bsc_avc", "w": [0.1, 0.9]}, ...],
 *    "mode": "independent" | "orthogonal",
 *    "constraint": "identical" | "unconstrained",
 *    "cost": {"lambda": 0.4, "gamma": 0.4}}
 * `mode_override` (nullable) replaces the document's mode. */
AVCK_API avck_status avck_avc_from_spec(const char* spec_json, const char* mode_override,
                                        avck_avc** out);

AVCK_API void avck_avc_free(avck_avc* avc);

AVCK_API avck_status avck_avc_dims(const avck_avc* avc, size_t* inputs, size_t* outputs,
                                   size_t* states);

/* --- analyses ------------------------------------------------------------ */

/* Symmetrizability verdict. `f_value` receives the exact distance from
 * symmetrizability; `symmetrizable` is 1 when it is at most `tol`
 * (pass tol <= 0 for the default 1e-9). */
AVCK_API avck_status avck_symmetrizability(const avck_avc* avc, double tol,
                                           int* symmetrizable, double* f_value);

/* CR-assisted and deterministic capacity values in bits. */
AVCK_API avck_status avck_cr_capacity(const avck_avc* avc, double* value);
AVCK_API avck_status avck_deterministic_capacity(const avck_avc* avc, double* value);

/* Full analysis report (symmetrizability + capacities) as a JSON document. */
AVCK_API avck_status avck_analyze_json(const avck_avc* avc, double tol, char** out_json);

/* Capacity report as a JSON document. */
AVCK_API avck_status avck_capacity_json(const avck_avc* avc, char** out_json);

/* Super-activation report for the composite described by `spec_json`
 * (needs at least two components). `mode_override` nullable as above; pass
 * `has_cost` nonzero to run the constrained zero/positive criterion with the
 * given budgets (overriding any cost in the document). */
AVCK_API avck_status avck_superact_json(const char* spec_json, const char* mode_override,
                                        int has_cost, double lambda, double gamma,
                                        char** out_json);

/* Symmetrizability scan over the first component's parameter square for a
 * diversity order k in {1,2,3}. Components 2 and 3 are the flip pair
 * {BSC(w21), BSC(1-w21)} and the pair {BSC(w31), BSC(w32)}. Rows are
 * "w11,w12,f_value,verdict" at 12 significant digits, lexicographic order. */
AVCK_API avck_status avck_region_csv(int k, double step, double w21, double w31,
                                     double w32, char** out_csv);

/* Monte Carlo decoding-error estimate under a jammer policy.
 *   policy:  "constant=<state index>" | "iid" (uniform) | "iid=q1,q2,..."
 *            | "symmetrizing" (uses the computed symmetrizing strategy)
 *   decoder: "ml" | "hamming"
 * Codewords are drawn i.i.d. uniform over the inputs from `seed`. When
 * lambda >= 0 the jammer is held to that average state budget. */
AVCK_API avck_status avck_simulate_json(const avck_avc* avc, size_t n, size_t m,
                                        const char* policy, const char* decoder,
                                        uint64_t trials, uint64_t seed, double lambda,
                                        char** out_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* AVCKIT_H */
