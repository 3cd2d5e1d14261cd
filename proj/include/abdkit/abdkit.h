#ifndef ABDKIT_H
#define ABDKIT_H

/* C interface to the abdkit shared library. Instances are opaque handles;
 * every function returns a status code, with results and error messages in
 * out-parameters. All returned strings are owned by the caller and must be
 * released with abdk_string_free(). */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct abdk_instance abdk_instance;

typedef enum {
  ABDK_OK = 0,
  ABDK_NO = 1,          /* solve: no explanation; check: disagreement */
  ABDK_ERR_PARSE = 2,   /* malformed input text */
  ABDK_ERR_INVALID = 3, /* instance/argument validation failure */
  ABDK_ERR_LIMIT = 4,   /* oracle or exhaustive-path size limit */
  ABDK_ERR_INTERNAL = 5
} abdk_status;

const char* abdk_version(void);

void abdk_string_free(char* s);

/* Parses the line-oriented instance format. On failure *out is null and
 * *errmsg (when non-null) carries the message. */
abdk_status abdk_instance_parse(const char* text, abdk_instance** out, char** errmsg);
void abdk_instance_free(abdk_instance* inst);

/* Instance text (canonical serialization). */
abdk_status abdk_instance_text(const abdk_instance* inst, char** out);

/* Same instance with the mode replaced ("symmetric" or "positive"). */
abdk_status abdk_instance_override_mode(const abdk_instance* inst, const char* mode,
                                        abdk_instance** out, char** errmsg);

/* Variable / hypothesis / formula counts. */
abdk_status abdk_instance_stats(const abdk_instance* inst, int* num_vars,
                                int* num_hyps, int* num_formulas);

/* "symmetric" or "positive". */
abdk_status abdk_instance_mode(const abdk_instance* inst, char** mode);

/* Clone of the declared connective set, spelled as in the clone table. */
abdk_status abdk_clone_name(const abdk_instance* inst, char** name, char** errmsg);

/* algorithm: "auto", "generic", "monotone", "affine", "syntactic", "brute"
 * (null means "auto"). Returns ABDK_OK with *found = 1 and the witness as a
 * space-separated literal list ("!x y"; empty string for the empty set), or
 * ABDK_NO with *found = 0 and *witness null. */
abdk_status abdk_solve(const abdk_instance* inst, const char* algorithm, int* found,
                       char** witness, char** algorithm_used, char** errmsg);

/* kind: "full", "positive-all", "positive-minimal". The count is returned in
 * decimal; method is "closed-form" or "brute-force". */
abdk_status abdk_count(const abdk_instance* inst, const char* kind, char** count,
                       char** method, char** errmsg);

/* Calls cb once per explanation in lexicographic order; a nonzero return
 * stops the enumeration. full_only skips explanations that leave hypotheses
 * unassigned. */
typedef int (*abdk_explanation_cb)(const char* literals, void* user);
abdk_status abdk_enumerate(const abdk_instance* inst, int full_only,
                           abdk_explanation_cb cb, void* user, char** errmsg);

/* Decision or counting classification of the instance's (clone, mode,
 * manifestation class). variant: null for the decision problem, else
 * "full", "positive-all" or "positive-minimal". hardness is null when no
 * hardness bound is recorded; note is usually null. */
abdk_status abdk_classify(const abdk_instance* inst, const char* variant,
                          char** membership, char** hardness, int* complete,
                          char** note, char** errmsg);

/* Generates an instance from genspec text; seed overrides the genspec seed
 * when nonzero. The instance text and the guaranteed relation are returned. */
abdk_status abdk_generate(const char* genspec, uint64_t seed, char** instance_text,
                          char** relation, char** errmsg);

/* Cross-validates solve() against the exhaustive oracle. ABDK_OK: agreement;
 * ABDK_NO: disagreement (report explains). */
abdk_status abdk_check(const abdk_instance* inst, const char* algorithm, char** report,
                       char** errmsg);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ABDKIT_H */
