/*
 * tightcount - exact counting of tight contact structures on the solid
 * torus, with the combinatorial machinery behind the count (negative
 * continued fractions, cyclic-nonadjacency counts, meridian-disk states,
 * and bypass rewriting on torus multicurves).
 *
 * All counts are exact and returned as decimal strings.  Every function
 * returns a tc_status; outputs are written through pointer arguments and
 * owned by the caller (release strings with tc_string_free, arrays with
 * tc_i64_free, handles with the matching *_free).  tc_last_error_message()
 * describes the most recent failure on the calling thread.
 */
#ifndef TIGHTCOUNT_H
#define TIGHTCOUNT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tc_status {
  TC_OK = 0,
  TC_ERROR_DOMAIN = 1,      /* input violates a precondition */
  TC_ERROR_UNSUPPORTED = 2, /* operation outside the supported range */
  TC_ERROR_RESOURCE = 3,    /* tractability guard tripped */
  TC_ERROR_NO_TIGHT = 4,    /* p = 0: no tight structure exists */
  TC_ERROR_INVARIANT = 5,   /* internal cross-check failed; report it */
  TC_ERROR_ARGUMENT = 6,    /* null pointer or malformed call */
  TC_ERROR_INTERNAL = 7
} tc_status;

const char* tc_status_name(tc_status status);
/* Message for the last failing call on this thread. */
const char* tc_last_error_message(void);

void tc_string_free(char* text);
void tc_i64_free(int64_t* values);

/* ------------------------------------------------------------------ */
/* Negative continued fractions                                        */
/* ------------------------------------------------------------------ */

/* Expansion of -p/q into entries <= -2 (or the single entry -1 when
 * p = q = 1), plus the invariants r and s as decimal strings. */
tc_status tc_expand(int64_t p, int64_t q, int64_t** entries,
                    size_t* entry_count, char** r, char** s);

/* Exact value of a nested fraction as a reduced rational (decimal
 * strings for numerator and denominator). */
tc_status tc_eval_expansion(const int64_t* entries, size_t entry_count,
                            char** numerator, char** denominator);

/* Slope (p_m, q_m) whose expansion is the input with -m appended. */
tc_status tc_extend_expansion(const int64_t* entries, size_t entry_count,
                              int64_t m, int64_t* p_out, int64_t* q_out);

/* ------------------------------------------------------------------ */
/* Exact counts                                                        */
/* ------------------------------------------------------------------ */

tc_status tc_catalan(int64_t n, char** count);
tc_status tc_kaplansky(int64_t k, int64_t n, char** count);
tc_status tc_kaplansky_bruteforce(int64_t k, int64_t n, int64_t max_bits,
                                  char** count);

/* Number of tight contact structures with dividing set (n, -p, q).
 * method: 0 closed formula, 1 recurrence.  Inputs are normalized first
 * (sign flip and meridian twists), and the canonical triple is reported
 * through p_out/q_out when non-null. */
tc_status tc_count(int64_t n, int64_t p, int64_t q, int method,
                   int64_t* p_out, int64_t* q_out, char** count);

/* S_n as a reduced rational; zero for every n >= 1. */
tc_status tc_alternating_convolution(int64_t n, char** numerator,
                                     char** denominator);

/* ------------------------------------------------------------------ */
/* Meridian-disk states                                                */
/* ------------------------------------------------------------------ */

typedef struct tc_state_iter tc_state_iter;

/* Stream of all non-crossing perfect matchings on 2*n*p points in
 * lexicographic balanced-parenthesis order.  np_limit <= 0 uses the
 * default guard (14). */
tc_status tc_state_iter_new(int64_t n, int64_t p, int64_t np_limit,
                            tc_state_iter** iter);
/* *state receives the next encoding or NULL when exhausted. */
tc_status tc_state_iter_next(tc_state_iter* iter, char** state);
void tc_state_iter_free(tc_state_iter* iter);

/* Bypass centers of a state (1-based indices into the 2m torus points). */
tc_status tc_state_centers(const char* state, int64_t** centers,
                           size_t* center_count);

/* Whether the state admits a bypass on every component flagged in
 * bits[0..2n-1] (each entry 0 or 1). */
tc_status tc_state_admits(const char* state, const uint8_t* bits,
                          size_t bit_count, int* admits);

tc_status tc_count_admitting_states(int64_t n, int64_t p, const uint8_t* bits,
                                    size_t bit_count, int64_t np_limit,
                                    char** count);

/* Bypass move on the disk. direction: 0 forward, 1 mirror. */
tc_status tc_state_rewire(const char* state, int32_t center, int direction,
                          char** rewired);

/* ------------------------------------------------------------------ */
/* Torus multicurves and bypass attachment                             */
/* ------------------------------------------------------------------ */

typedef struct tc_multicurve tc_multicurve;

tc_status tc_multicurve_build(int64_t n, int64_t p, int64_t q,
                              tc_multicurve** mc);
void tc_multicurve_free(tc_multicurve* mc);

/* Canonical triple (n, -p, q); twisting number is -n*p. */
tc_status tc_multicurve_params(const tc_multicurve* mc, int64_t* n,
                               int64_t* p, int64_t* q, int64_t* twisting);

/* side: 0 exterior, 1 interior.  orientation: 0 'a', 1 'b'. */
tc_status tc_multicurve_attach(const tc_multicurve* mc, int64_t center,
                               int side, int orientation,
                               tc_multicurve** result);

tc_status tc_multicurve_size(const tc_multicurve* mc, int64_t* size);
tc_status tc_multicurve_component_count(const tc_multicurve* mc,
                                        int64_t* count);
tc_status tc_multicurve_component_class(const tc_multicurve* mc, int64_t id,
                                        int64_t* lambda, int64_t* mu);
/* Ids of homotopically trivial ((0,0)-class) components. */
tc_status tc_multicurve_trivial_components(const tc_multicurve* mc,
                                           int64_t** ids, size_t* id_count);

tc_status tc_multicurve_serialize(const tc_multicurve* mc, char** text);
tc_status tc_multicurve_parse(const char* text, tc_multicurve** mc);
tc_status tc_multicurve_equal(const tc_multicurve* a, const tc_multicurve* b,
                              int* equal);

/* Outcome of one attachment: 0 Trivial, 1 DecreaseBy2, 2 IncreaseBy2,
 * 3 DehnTwist.  TC_ERROR_INVARIANT (with a detailed message) if the pair
 * matches none of the four cases. */
tc_status tc_multicurve_classify(const tc_multicurve* before,
                                 const tc_multicurve* after, int* outcome);

/* ------------------------------------------------------------------ */
/* Verification suites                                                 */
/* ------------------------------------------------------------------ */

/* name: "ncf", "identities", "kaplansky", "states", "torus" or "all".
 * scale <= 0 picks each suite's default sweep bound.  Both renderings of
 * the report are returned; *all_pass is 1 when every check passed. */
tc_status tc_verify(const char* name, int64_t scale, char** text_report,
                    char** json_report, int* all_pass);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TIGHTCOUNT_H */
