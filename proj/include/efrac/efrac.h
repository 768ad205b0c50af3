#ifndef EFRAC_H
#define EFRAC_H

/*
 * C interface to the efrac library: exact greedy and optimal n-term
 * Egyptian-fraction underapproximations of rationals in (0, 1].
 *
 * Conventions:
 *   - Functions returning efrac_status report failures through the code and
 *     leave a message readable via efrac_last_error() (thread local, valid
 *     until the next failing call on the same thread).
 *   - Out parameters are written only on EFRAC_OK unless noted.
 *   - Returned char* are malloc'd decimal/fraction strings; release them
 *     with efrac_string_free.  Accessors returning char* or handles yield
 *     NULL on out-of-range indices.
 *   - Rationals cross the boundary as "p" or "p/q" in base 10; integer
 *     sequences as comma-separated base-10 values.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum efrac_status {
  EFRAC_OK = 0,
  EFRAC_ERR_PARSE = 1,
  EFRAC_ERR_ZERO_DENOMINATOR = 2,
  EFRAC_ERR_DOMAIN = 3,
  EFRAC_ERR_BAD_SEQUENCE = 4,
  EFRAC_ERR_DIVISIBILITY = 5,
  EFRAC_ERR_PRECONDITION = 6,
  EFRAC_ERR_INFEASIBLE = 7,
  EFRAC_ERR_BUDGET = 8,
  /* Signal, not a failure: the smoothing move has nothing to do. */
  EFRAC_COMPONENTWISE = 9,
  EFRAC_ERR_INTERNAL = 10
} efrac_status;

const char* efrac_last_error(void);
void efrac_string_free(char* s);

typedef struct efrac_rat efrac_rat;         /* exact rational */
typedef struct efrac_seq efrac_seq;         /* list of big integers */
typedef struct efrac_best efrac_best;       /* outcome of an optimal search */
typedef struct efrac_records efrac_records; /* two-term classification rows */
typedef struct efrac_splits efrac_splits;   /* additivity probe rows */

/* ---- rationals ---- */

efrac_status efrac_rat_parse(const char* text, efrac_rat** out);
/* num and den are base-10 integers; den may be negative but not zero. */
efrac_status efrac_rat_make(const char* num, const char* den, efrac_rat** out);
char* efrac_rat_str(const efrac_rat* r);
/* -1, 0, 1 as a < b, a == b, a > b */
int efrac_rat_cmp(const efrac_rat* a, const efrac_rat* b);
void efrac_rat_free(efrac_rat* r);

/* Unique a >= 2 with 1/a < theta <= 1/(a-1); theta must lie in (0, 1]. */
efrac_status efrac_greedy_denominator(const efrac_rat* theta, char** out);

/* ---- integer sequences ----
 * The handle is a plain carrier; each operation below enforces its own
 * requirements (nondecreasing, greedy growth, ...) and reports violations. */

efrac_status efrac_seq_parse(const char* csv, efrac_seq** out);
size_t efrac_seq_len(const efrac_seq* s);
char* efrac_seq_term(const efrac_seq* s, size_t i);
char* efrac_seq_str(const efrac_seq* s);
void efrac_seq_free(efrac_seq* s);

/* ---- greedy expansions ---- */

efrac_status efrac_greedy_sequence(const efrac_rat* theta, int n, efrac_seq** out);
efrac_status efrac_sylvester(int n, efrac_seq** out);
/* Greedy denominators of p/q in closed form; requires p | q+1. */
efrac_status efrac_closed_form(const char* p, const char* q, int n, efrac_seq** out);
/* theta minus the reciprocal sum of seq; must stay strictly positive. */
efrac_status efrac_greedy_remainder(const efrac_rat* theta, const efrac_seq* seq, efrac_rat** out);
/* The interval (lo, hi] of theta whose greedy expansion starts with seq. */
efrac_status efrac_criterion_interval(const efrac_seq* seq, efrac_rat** lo, efrac_rat** hi);
efrac_status efrac_is_greedy_for(const efrac_seq* seq, const efrac_rat* theta, int* out);

/* ---- optimal underapproximations ----
 * node_budget 0 selects the default of 10^7 nodes; exhausting the budget
 * fails with EFRAC_ERR_BUDGET.  Results do not depend on threads. */

efrac_status efrac_best_search(const efrac_rat* theta, int n, uint64_t node_budget, int threads,
                               efrac_best** out);
/* Terms restricted to the allowed list (deduplicated internally, all >= 2). */
efrac_status efrac_best_restricted(const efrac_rat* theta, int n, const efrac_seq* allowed,
                                   uint64_t node_budget, int threads, efrac_best** out);
/* Independent cross-check enumeration with terms in [2, cap]. */
efrac_status efrac_brute_force(const efrac_rat* theta, int n, const char* cap, efrac_best** out);

char* efrac_best_value(const efrac_best* b);
size_t efrac_best_witness_count(const efrac_best* b);
efrac_status efrac_best_witness(const efrac_best* b, size_t i, efrac_seq** out);
/* The restricted search may have no greedy reference sequence. */
int efrac_best_has_greedy(const efrac_best* b);
efrac_status efrac_best_greedy(const efrac_best* b, efrac_seq** out);
char* efrac_best_greedy_value(const efrac_best* b);
int efrac_best_greedy_is_best(const efrac_best* b);
int efrac_best_unique(const efrac_best* b);
uint64_t efrac_best_nodes(const efrac_best* b);
/* GREEDY_UNIQUE_BEST, GREEDY_TIED_BEST, GREEDY_NOT_BEST or GREEDY_INFEASIBLE */
char* efrac_best_classification(const efrac_best* b);
void efrac_best_free(efrac_best* b);

/* ---- two-term analysis ---- */

efrac_status efrac_harmonic_interval(const char* a1, efrac_rat** lo, efrac_rat** hi);
efrac_status efrac_harmonic_subinterval(const char* a1, const char* a2, efrac_rat** lo,
                                        efrac_rat** hi);
/* First two greedy denominators of theta. */
efrac_status efrac_locate(const efrac_rat* theta, char** a1, char** a2);
/* Smallest a2 with 1/a1 + 1/a2 <= 1/x1 + 1/x2 for a competitor pair. */
efrac_status efrac_induced_a2(const char* a1, const char* x1, const char* x2, char** a2, int* tie,
                              int* greedy_valid);
/* Full classification of the competitor pairs of a1. */
efrac_status efrac_two_term(const char* a1, efrac_records** out);

size_t efrac_records_count(const efrac_records* r);
char* efrac_records_x1(const efrac_records* r, size_t i);
char* efrac_records_x2(const efrac_records* r, size_t i);
char* efrac_records_a2(const efrac_records* r, size_t i);
/* "TIE" or "STRICT_IMPROVEMENT" */
char* efrac_records_relation(const efrac_records* r, size_t i);
int efrac_records_greedy_valid(const efrac_records* r, size_t i);
int efrac_records_has_interval(const efrac_records* r, size_t i);
efrac_status efrac_records_interval(const efrac_records* r, size_t i, efrac_rat** lo,
                                    efrac_rat** hi);
void efrac_records_free(efrac_records* r);

/* ---- exchange inequality ----
 * Sequences are comma-separated positive rationals; direction is 0 for
 * increasing, 1 for decreasing, and names the monotonicity both sequences
 * must satisfy. */

/* direction 0 checks sum(1/u) < sum(1/v); direction 1 checks
 * sum(v) < sum(u).  Both require prefix products of v dominated by u. */
efrac_status efrac_verify_ineq(const char* u, const char* v, int direction, char** lhs, char** rhs,
                               int* holds);
efrac_status efrac_prefix_dominates(const char* v, const char* u, int direction, int* out);
/* One exchange move toward v; EFRAC_COMPONENTWISE when none is needed. */
efrac_status efrac_smoothing_step(const char* u, const char* v, char** out);

/* ---- additivity probe ---- */

efrac_status efrac_eg_split(const efrac_rat* theta, int n_max, uint64_t node_budget, int threads,
                            efrac_splits** out);
/* Rows are (n, n0) pairs with 1 <= n0 < n <= n_max, ordered by n then n0. */
size_t efrac_splits_count(const efrac_splits* s);
efrac_status efrac_splits_row(const efrac_splits* s, size_t i, int* n, int* n0, int* additive,
                              int* tail_greedy);
/* u_n for 1 <= n <= n_max. */
char* efrac_splits_value(const efrac_splits* s, int n);
char* efrac_splits_head(const efrac_splits* s, size_t i);
char* efrac_splits_tail(const efrac_splits* s, size_t i);
void efrac_splits_free(efrac_splits* s);

#ifdef __cplusplus
}
#endif

#endif /* EFRAC_H */
