/* Licensed under the Apache License, Version 2.0, see LICENSE for details. */
/* SPDX-License-Identifier: Apache-2.0 */

/*
 * C interface to the axt sampling library.
 *
 * Objects are opaque handles created by *_new / *_parse / *_from_json calls
 * and released with the matching *_free. Every fallible call returns an
 * axt_status; on failure axt_last_error() describes the problem for the
 * calling thread. Strings returned through char** out-parameters are owned by
 * the caller and released with axt_string_free.
 *
 * Scheme names: oddmul2w, modprime, affine2indep, poly, tabulation, mulshift,
 * parity, prop2, fullyrandom. Universes: "pow2:<w>", "prime:<p>",
 * "finite:<u>". Monoids: "f2", "int64", "vec:<len>". Values are passed in
 * their text form: 0/1, a decimal (negative values wrap), or comma-separated
 * lanes.
 */

#ifndef AXT_AXT_H
#define AXT_AXT_H

#include <stddef.h>
#include <stdint.h>

#if defined(AXT_BUILDING_LIBRARY)
#define AXT_API __attribute__((visibility("default")))
#else
#define AXT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum axt_status {
  AXT_OK = 0,
  AXT_INVALID_ARGUMENT = 1,
  AXT_SHAPE_MISMATCH = 2,
  AXT_OUT_OF_RANGE = 3,
  AXT_TOO_LARGE = 4,
  AXT_PARSE = 5,
  AXT_NULL_POINTER = 6,
  AXT_INTERNAL = 7
} axt_status;

typedef struct axt_sampler axt_sampler;
typedef struct axt_assignment axt_assignment;
typedef struct axt_accumulator axt_accumulator;
typedef struct axt_vector_sampler axt_vector_sampler;
typedef struct axt_corpus axt_corpus;
typedef struct axt_matrix axt_matrix;
typedef struct axt_graph axt_graph;

AXT_API const char* axt_version(void);
AXT_API const char* axt_status_string(axt_status status);
/* Message of the last failed call on this thread; "" if none. */
AXT_API const char* axt_last_error(void);
AXT_API void axt_string_free(char* s);

/* Samplers. size_json holds random_spec size parameters, e.g. {"w":8}. */
AXT_API axt_status axt_sampler_from_json(const char* spec_json, axt_sampler** out);
AXT_API axt_status axt_sampler_random(const char* scheme, const char* size_json, uint64_t seed,
                                      axt_sampler** out);
AXT_API axt_status axt_sampler_sample(const axt_sampler* s, uint64_t key, int* out);
AXT_API axt_status axt_sampler_spec_json(const axt_sampler* s, char** out);
AXT_API axt_status axt_sampler_universe(const axt_sampler* s, char** out);
AXT_API void axt_sampler_free(axt_sampler* s);

/* Value assignments. */
AXT_API axt_status axt_assignment_new(const char* universe, const char* monoid,
                                      axt_assignment** out);
/* Stream text ("<key> <value>" lines) accumulated into an assignment. */
AXT_API axt_status axt_assignment_parse(const char* text, const char* universe,
                                        const char* monoid, axt_assignment** out);
AXT_API axt_status axt_assignment_from_json(const char* json, axt_assignment** out);
AXT_API axt_status axt_assignment_set(axt_assignment* a, uint64_t key, const char* value);
AXT_API axt_status axt_assignment_add(axt_assignment* a, uint64_t key, const char* value);
AXT_API axt_status axt_assignment_size(const axt_assignment* a, size_t* out);
AXT_API axt_status axt_assignment_to_json(const axt_assignment* a, char** out);
AXT_API void axt_assignment_free(axt_assignment* a);

AXT_API axt_status axt_sampled_sum(const axt_sampler* s, const axt_assignment* a, char** value);
/* Exact |GOOD| over the threshold space for a threshold scheme. */
AXT_API axt_status axt_good_measure(const axt_sampler* s, const axt_assignment* a, char** json);

/* Streaming digest over copies of `count` samplers. */
AXT_API axt_status axt_accumulator_new(const axt_sampler* const* samplers, size_t count,
                                       const char* monoid, axt_accumulator** out);
AXT_API axt_status axt_accumulator_update(axt_accumulator* acc, uint64_t key, const char* value);
/* JSON array of the d running sums. */
AXT_API axt_status axt_accumulator_digest(const axt_accumulator* acc, char** json);
AXT_API void axt_accumulator_free(axt_accumulator* acc);

/* d samplers plus d random bits. */
AXT_API axt_status axt_vector_sampler_random(size_t d, const char* scheme, const char* size_json,
                                             uint64_t seed, axt_vector_sampler** out);
AXT_API axt_status axt_vector_sampler_sums(const axt_vector_sampler* vs, const axt_assignment* a,
                                           char** json);
AXT_API axt_status axt_vector_sampler_bit(const axt_vector_sampler* vs, uint64_t key, int* out);
AXT_API void axt_vector_sampler_free(axt_vector_sampler* vs);

/* The versioned built-in corpus over a universe. */
AXT_API axt_status axt_corpus_builtin(const char* universe, axt_corpus** out);
AXT_API size_t axt_corpus_size(const axt_corpus* c);
AXT_API unsigned axt_corpus_version(void);
/* Borrowed name, valid until axt_corpus_free. */
AXT_API axt_status axt_corpus_name(const axt_corpus* c, size_t i, const char** out);
/* A fresh copy of entry i. */
AXT_API axt_status axt_corpus_get(const axt_corpus* c, size_t i, axt_assignment** out);
AXT_API void axt_corpus_free(axt_corpus* c);

/*
 * Verification. Results are JSON objects. size is w for oddmul2w and p for
 * modprime / affine2indep. The exhaustive report carries "bound" and
 * "meets_bound".
 */
AXT_API axt_status axt_verify_exhaustive(const char* scheme, uint64_t size,
                                         const axt_assignment* a, unsigned workers, char** json);
AXT_API axt_status axt_verify_mc(const char* scheme, const char* size_json,
                                 const axt_assignment* a, uint64_t trials, uint64_t seed,
                                 char** json);
AXT_API axt_status axt_lemma_good_sum(unsigned w, uint64_t z, uint64_t k, char** json);
AXT_API axt_status axt_lemma_good_sum_sweep(unsigned w_min, unsigned w_max, unsigned workers,
                                            char** json);
/* scheme: "affine2indep" or "modprime". */
AXT_API axt_status axt_lemma_tail(const char* scheme, uint64_t p, const uint64_t* keys,
                                  size_t count, uint64_t x, uint64_t delta, char** json);
AXT_API axt_status axt_lemma_tail_sweep(const char* scheme, uint64_t p, size_t max_set,
                                        uint64_t max_delta, char** json);
/* mode: "exact" or "mc"; field e.g. "gf2e:4". */
AXT_API axt_status axt_ams_check(const char* mode, const uint64_t* keys, const int64_t* values,
                                 size_t count, const char* field, uint64_t trials, uint64_t seed,
                                 char** json);
/* options_json may be NULL for the defaults. */
AXT_API axt_status axt_counterexamples(const char* options_json, char** json);
AXT_API axt_status axt_smallbias(const uint64_t* keys, size_t count, size_t d, const char* scheme,
                                 const char* size_json, uint64_t trials, uint64_t seed,
                                 char** json);

/* Matrices over Z / 2^64. Text form: n, then n rows of n integers. */
AXT_API axt_status axt_matrix_new(size_t n, const uint64_t* entries, axt_matrix** out);
AXT_API axt_status axt_matrix_parse(const char* text, axt_matrix** out);
AXT_API axt_status axt_matrix_multiply(const axt_matrix* a, const axt_matrix* b,
                                       axt_matrix** out);
AXT_API size_t axt_matrix_dim(const axt_matrix* m);
AXT_API axt_status axt_matrix_get(const axt_matrix* m, size_t i, size_t j, uint64_t* out);
AXT_API axt_status axt_matrix_set(axt_matrix* m, size_t i, size_t j, uint64_t value);
AXT_API axt_status axt_matrix_to_text(const axt_matrix* m, char** out);
AXT_API void axt_matrix_free(axt_matrix* m);
AXT_API axt_status axt_freivald(const axt_matrix* a, const axt_matrix* b, const axt_matrix* c,
                                size_t rounds, uint64_t seed, char** json);

/* Stream text against a claimed assignment, using its universe and monoid. */
AXT_API axt_status axt_stream_test(const char* stream_text, const axt_assignment* claimed,
                                   size_t d, uint64_t seed, char** json);

/* Graph text: "V E", E lines "u v", then one line of tree vertices. */
AXT_API axt_status axt_graph_parse(const char* text, axt_graph** out);
AXT_API void axt_graph_free(axt_graph* g);
AXT_API axt_status axt_tree_test(const axt_graph* g, size_t d, uint64_t seed, char** json);

/* table may be NULL. */
AXT_API axt_status axt_bench(uint64_t iterations, uint64_t seed, char** json, char** table);

#ifdef __cplusplus
}
#endif

#endif
