/* slidewin — exact sliding-window statistics under explicit space budgets.
 *
 * C interface over the C++ core: opaque handles, status codes, and a
 * thread-local error message. Every function that can fail returns a
 * slidewin_status; on failure slidewin_last_error() describes the cause.
 * Handles are freed with the matching *_free function.
 */
#ifndef SLIDEWIN_H
#define SLIDEWIN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum slidewin_status {
  SLIDEWIN_OK = 0,
  SLIDEWIN_ERR_INVALID_ARGUMENT = 1,
  SLIDEWIN_ERR_IO = 2,
  SLIDEWIN_ERR_PARSE = 3,
  SLIDEWIN_ERR_BUDGET = 4,
  SLIDEWIN_ERR_VERIFY = 5,
  SLIDEWIN_ERR_VALUE_OVERFLOW = 6,
  SLIDEWIN_ERR_INTERNAL = 7
} slidewin_status;

typedef struct slidewin_seq slidewin_seq;
typedef struct slidewin_result slidewin_result;

const char* slidewin_version(void);
const char* slidewin_status_name(slidewin_status status);

/* Thread-local message describing the most recent failure on this thread. */
const char* slidewin_last_error(void);

/* ---- input sequences ---------------------------------------------------- */

typedef struct slidewin_gen_spec {
  /* uniform | all_equal | all_distinct | planted_duplicate | sorting_reduction
   * (kebab-case spellings are accepted too) */
  const char* kind;
  uint64_t n;    /* window length; every kind generates 2n - 1 symbols */
  uint64_t seed;
  uint64_t symbol;         /* all_equal: the repeated symbol (0 = 1) */
  uint64_t dup_pos1;       /* planted_duplicate: 1-based pair positions */
  uint64_t dup_pos2;
  const uint64_t* payload; /* sorting_reduction: values in {2..n-1} */
  size_t payload_len;
} slidewin_gen_spec;

slidewin_status slidewin_generate(const slidewin_gen_spec* spec, slidewin_seq** out);
slidewin_status slidewin_seq_load(const char* path, slidewin_seq** out);
slidewin_status slidewin_seq_save(const slidewin_seq* seq, const char* path);
uint64_t slidewin_seq_length(const slidewin_seq* seq);
uint64_t slidewin_seq_alphabet_size(const slidewin_seq* seq);
slidewin_status slidewin_seq_symbol(const slidewin_seq* seq, uint64_t index, uint64_t* out);
void slidewin_seq_free(slidewin_seq* seq);

/* ---- algorithm runs ------------------------------------------------------ */

typedef struct slidewin_run_spec {
  /* fk | f0mod2 | ed-avg | ed-reduce | max | min | order */
  const char* algo;
  uint64_t n;          /* window length; the sequence must have 2n - 1 symbols */
  uint64_t k;          /* fk: frequency-moment exponent */
  uint64_t rank;       /* order: 1..n */
  uint64_t space_bits; /* 0 = unbudgeted; only fk / f0mod2 take a budget */
  const char* solver;  /* ed-reduce: sort | hash (NULL = sort) */
  int randomized;      /* ed-reduce: majority-voted solver probes */
  int verify;          /* nonzero: check the outputs against the oracle */
} slidewin_run_spec;

/* Runs the algorithm; on success returns a result handle even if
 * verification failed (inspect slidewin_result_verified). Budget violations
 * and configuration errors fail the call itself. */
slidewin_status slidewin_run(const slidewin_seq* seq, const slidewin_run_spec* spec,
                             slidewin_result** out);

uint64_t slidewin_result_reads(const slidewin_result* r);
uint64_t slidewin_result_comparisons(const slidewin_result* r);
uint64_t slidewin_result_peak_aux_words(const slidewin_result* r);
uint64_t slidewin_result_wall_ns(const slidewin_result* r);
/* 1 = verified, 0 = mismatch, -1 = not checked */
int slidewin_result_verified(const slidewin_result* r);
uint64_t slidewin_result_output_count(const slidewin_result* r);
/* SLIDEWIN_ERR_VALUE_OVERFLOW if the exact output does not fit 64 bits. */
slidewin_status slidewin_result_output_u64(const slidewin_result* r, uint64_t index,
                                           uint64_t* out);
/* Decimal rendering of the exact output. If needed is non-NULL it receives
 * the full size including the terminating NUL; the buffer is filled as far
 * as it fits. */
slidewin_status slidewin_result_output_str(const slidewin_result* r, uint64_t index, char* buf,
                                           size_t buf_len, size_t* needed);
void slidewin_result_free(slidewin_result* r);

/* Word size w = ceil(log2 max(n, alphabet_size)) used to derive budget
 * slots = space_bits / w. */
uint32_t slidewin_word_bits(uint64_t n, uint64_t alphabet_size);

#ifdef __cplusplus
}
#endif

#endif /* SLIDEWIN_H */
