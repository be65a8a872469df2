/* fgindex: primitivity and simplicity indices of words in free groups.
 *
 * C interface to the shared library. All functions return fgi_status;
 * output strings are heap-allocated and released with fgi_string_free.
 * On any non-OK status, fgi_last_error() returns a thread-local detail
 * message valid until the next library call on the same thread.
 */

#ifndef FGINDEX_H
#define FGINDEX_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fgi_status {
  FGI_OK = 0,
  FGI_VERIFY_FAILED = 1,   /* a verification driver found a failing case */
  FGI_CAP_EXHAUSTED = 2,   /* search cap reached without an answer */
  FGI_INFEASIBLE = 3,      /* refused by a feasibility guard */
  FGI_DISCREPANCY = 4,     /* verified, but contradicts a recorded value */
  FGI_PARSE_ERROR = 64,    /* malformed word text or document */
  FGI_USAGE_ERROR = 65,    /* invalid argument combination */
  FGI_INTERNAL_ERROR = 70
} fgi_status;

typedef struct fgi_word fgi_word;

const char* fgi_version(void);
const char* fgi_status_name(fgi_status s);
const char* fgi_last_error(void);
void fgi_string_free(char* s);

/* ---- words ------------------------------------------------------- */

/* Text format: a/A, b/B for generators 1 and 2, x3/X3 upward; ^ takes an
 * integer exponent; whitespace separates factors. */
fgi_status fgi_word_parse(const char* text, int rank, fgi_word** out);
void fgi_word_free(fgi_word* w);
fgi_status fgi_word_print(const fgi_word* w, char** out);
int fgi_word_rank(const fgi_word* w);
long fgi_word_length(const fgi_word* w);
long fgi_word_cyclic_length(const fgi_word* w);

/* *out = 1 or 0. The word must be nontrivial (and rank >= 2 for
 * simplicity). */
fgi_status fgi_word_is_primitive(const fgi_word* w, int* out);
fgi_status fgi_word_is_simple(const fgi_word* w, int* out);

/* Whitehead graph of the cyclic reduction, as DOT text. */
fgi_status fgi_whitehead_graph_dot(const fgi_word* w, char** dot_out);

/* ---- index search ------------------------------------------------ */

#define FGI_KIND_PRIMITIVITY 0
#define FGI_KIND_SIMPLICITY 1

typedef struct fgi_index_options {
  int cap;          /* 0: cyclic length - 1 */
  int degree_guard; /* 0: 7 */
  int workers;      /* 0: FGINDEX_WORKERS env var, else 1 */
} fgi_index_options;

/* Least index of a subgroup containing the word as a primitive (or
 * simple) element. On FGI_OK, *index_out is the index and, when
 * certificate_json_out is non-NULL, it receives the certificate document.
 * FGI_CAP_EXHAUSTED / FGI_INFEASIBLE report the search bound instead. */
fgi_status fgi_index(const fgi_word* w, int kind,
                     const fgi_index_options* opts, int* index_out,
                     char** certificate_json_out);

/* ---- verification drivers ---------------------------------------- */

/* selector: thm1 | thm2 | thm4 | prop4 | lemma1 | power | bounds.
 * params_json carries the selector's parameters, e.g.
 *   thm1   {"n_from":2,"n_to":200}
 *   thm2   {"i_from":3,"i_to":4,"degree_guard":4}
 *   thm4   {"n_from":2,"n_to":8}
 *   prop4  {"n":3,"t":3,"d":2,"dp":2}
 *   lemma1 {"d_from":2,"d_to":20}
 *   power  {"degree_from":1,"degree_to":3}
 *   bounds {"m_max":100000,"i_max":30,"lcm_cap":10000}
 * The report document is always written when report_json_out is non-NULL,
 * including on FGI_VERIFY_FAILED and FGI_DISCREPANCY. */
fgi_status fgi_verify(const char* selector, const char* params_json,
                      char** report_json_out);

/* ---- cover enumeration ------------------------------------------- */

/* Called once per canonical cover with a fgindex.cover/1 document.
 * Return nonzero to stop the stream. */
typedef int (*fgi_cover_callback)(const char* cover_json, void* user);

/* Streams every canonical degree-`degree` cover of the rank-`rank` rose,
 * optionally only those whose subgroup contains `contains_or_null`.
 * *count_out receives the number of covers streamed. */
fgi_status fgi_enumerate(int rank, int degree,
                         const fgi_word* contains_or_null,
                         fgi_cover_callback cb, void* user,
                         long* count_out);

/* ---- constructions ------------------------------------------------ */

/* params_json: {"kind":"lemma1","d":3}
 *            | {"kind":"prop4","n":5,"t":5,"d":2,"dp":2}
 *            | {"kind":"power","sigma_a":[1,0],"sigma_b":[1,0]}
 * artifact_json_out receives a fgindex.construct/1 document. */
fgi_status fgi_construct(const char* params_json, char** artifact_json_out);

/* DOT rendering of the graph inside a construct document. */
fgi_status fgi_construct_dot(const char* params_json, char** dot_out);

/* ---- number theory ------------------------------------------------ */

/* CSV tables: psi_csv_out gets (m, psi(m), psi(m)/m) for m <= m_max;
 * lcm_csv_out gets (i, n_i, d(n_i), log n_i) for i <= i_max. Either
 * output pointer may be NULL to skip that table. */
fgi_status fgi_bounds_csv(long m_max, int i_max, char** psi_csv_out,
                          char** lcm_csv_out);

#ifdef __cplusplus
}
#endif

#endif /* FGINDEX_H */
