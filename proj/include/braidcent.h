/* C interface to the braid centralizer engine.
 *
 * Braids are held behind opaque handles created from the text format
 * "Bn: e1 e2 ...", where letter k stands for the k-th Artin generator and
 * -k for its inverse.  Heavyweight queries return reports as JSON strings
 * in a versioned schema; bc_render_text turns any report into a
 * human-readable block and bc_verify_report replays the certificates a
 * report carries.
 *
 * Functions returning a pointer return NULL on failure, functions
 * returning int return a negative value; bc_last_error / bc_last_error_message
 * then describe the most recent failure in the calling thread.  Strings
 * returned by the library are heap copies: release them with
 * bc_string_free.  Braid handles are released with bc_braid_free.
 */

#ifndef BRAIDCENT_H
#define BRAIDCENT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bc_braid bc_braid;

/* Error codes for bc_last_error. */
enum {
  BC_OK = 0,
  BC_ERR_PARSE = 1,    /* malformed braid text or report JSON */
  BC_ERR_STRANDS = 2,  /* operands on different strand counts */
  BC_ERR_INVALID = 3,  /* structurally invalid argument */
  BC_ERR_BUDGET = 4,   /* a search cap was exhausted */
  BC_ERR_INTERNAL = 5  /* engine invariant violated; indicates a bug */
};

int bc_last_error(void);
const char* bc_last_error_message(void);

/* --- braid values ------------------------------------------------------- */

bc_braid* bc_parse(const char* text);
bc_braid* bc_identity(int strands);
bc_braid* bc_copy(const bc_braid* b);
void bc_braid_free(bc_braid* b);

int bc_strands(const bc_braid* b);
long long bc_exponent_sum(const bc_braid* b);
char* bc_format(const bc_braid* b);
void bc_string_free(char* s);

bc_braid* bc_product(const bc_braid* a, const bc_braid* b);
bc_braid* bc_inverse(const bc_braid* a);
bc_braid* bc_power(const bc_braid* a, int k);
bc_braid* bc_conjugate(const bc_braid* w, const bc_braid* c);

/* 1 = yes, 0 = no, negative = error. */
int bc_equal(const bc_braid* a, const bc_braid* b);
int bc_is_trivial(const bc_braid* a);
int bc_commutes(const bc_braid* a, const bc_braid* b);

/* Largest number of generators the engine will emit for a centralizer on
 * the given strand count; negative on error. */
long long bc_centralizer_bound(int strands);

/* --- reports ------------------------------------------------------------ */

/* Options apply where meaningful and may be NULL for defaults:
 * {"sss_cap": N, "budget": N, "root_cap": N}. */

char* bc_nf_json(const bc_braid* w);
char* bc_bkl_nf_json(const bc_braid* w);
char* bc_equal_json(const bc_braid* a, const bc_braid* b);
char* bc_conj_json(const bc_braid* a, const bc_braid* b, const char* options);
char* bc_sss_json(const bc_braid* w, const char* options);
char* bc_classify_json(const bc_braid* w, const char* options);
char* bc_reduce_json(const bc_braid* w, const char* options);
char* bc_regular_form_json(const bc_braid* w, const char* options);
char* bc_centralizer_json(const bc_braid* w, const char* options);
char* bc_bound_json(int strands);

/* Human rendering of a report produced by any of the calls above. */
char* bc_render_text(const char* report_json);

/* Replays the certificate checks carried by a report.
 * 1 = all pass, 0 = a check failed, negative = malformed report. */
int bc_verify_report(const char* report_json);

/* 1 when the report holds partial results (an exhausted search budget),
 * 0 otherwise, negative on malformed input. */
int bc_report_partial(const char* report_json);

#ifdef __cplusplus
}
#endif

#endif /* BRAIDCENT_H */
