/* C interface to the partpat library. All strings are UTF-8, NUL-terminated. */
#ifndef PARTPAT_H
#define PARTPAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PP_API __declspec(dllexport)
#else
#define PP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pp_status {
  PP_OK = 0,
  PP_NOT_FOUND = 1,        /* no witness / not equivalent */
  PP_ERR_PARSE = 2,        /* malformed text input */
  PP_ERR_OVERFLOW = 3,     /* a count does not fit in 64 bits */
  PP_ERR_PRECONDITION = 4, /* well-formed input outside the domain of the operation */
  PP_ERR_INVARIANT = 5,    /* an internal consistency check failed */
  PP_ERR_IO = 6,
  PP_ERR_ARGUMENT = 7, /* null pointer or unknown name */
  PP_ERR_INTERNAL = 8
} pp_status;

typedef enum pp_format { PP_CSV = 0, PP_JSON = 1 } pp_format;
typedef enum pp_shape_kind { PP_FERRERS = 0, PP_STACK = 1 } pp_shape_kind;
typedef enum pp_fill_mode { PP_SEMI_STANDARD = 0, PP_SPARSE = 1 } pp_fill_mode;

typedef struct pp_context pp_context;
typedef struct pp_text pp_text;

PP_API const char* pp_version(void);
PP_API const char* pp_status_name(pp_status s);

PP_API pp_status pp_context_new(pp_context** out);
PP_API void pp_context_free(pp_context* ctx);
/* 0 = hardware concurrency */
PP_API pp_status pp_context_set_threads(pp_context* ctx, unsigned threads);
/* path == NULL disables the cache; "" selects the default location */
PP_API pp_status pp_context_set_cache(pp_context* ctx, const char* path);
/* message of the last failed call on this context, "" if none */
PP_API const char* pp_last_error(const pp_context* ctx);

PP_API const char* pp_text_data(const pp_text* t);
PP_API size_t pp_text_size(const pp_text* t);
PP_API void pp_text_free(pp_text* t);

/* p(n; pattern) */
PP_API pp_status pp_count(pp_context* ctx, const char* pattern, int n, uint64_t* out);
/* table for n in [n_lo, n_hi], optionally refined by number of blocks */
PP_API pp_status pp_count_table(pp_context* ctx, const char* pattern, int n_lo, int n_hi, int by_blocks,
                                pp_format fmt, pp_text** out);
/* groups all patterns of a size by counts up to horizon; class_count may be NULL */
PP_API pp_status pp_classify(pp_context* ctx, int size, int horizon, int full_vectors, pp_format fmt, pp_text** out,
                             size_t* class_count);
/* least n <= max_n separating the two patterns; PP_NOT_FOUND if none */
PP_API pp_status pp_witness(pp_context* ctx, const char* p1, const char* p2, int max_n, int* out_n);

/* fillings of a shape ("2,4,4") avoiding M(avoid, k) */
PP_API pp_status pp_fillings_count(pp_context* ctx, pp_shape_kind kind, const char* shape, const char* avoid, int k,
                                   pp_fill_mode mode, uint64_t* out);
/* compares M(a, k) and M(b, k) on every shape within the bounds; PP_NOT_FOUND if a shape separates them */
PP_API pp_status pp_fillings_equiv(pp_context* ctx, pp_shape_kind kind, const char* a, const char* b, int k,
                                   int max_columns, int max_rows, int refine_rows, pp_text** report);

typedef struct pp_bijection_params {
  int p, q, r;
  int k, m;
  int lemma;         /* l124: 1..4 */
  int plus;          /* sigma: nonzero selects the 1 2^(p+2) 1 2^q 3 2^r family */
  const char* shape; /* fall: stack shape heights */
} pp_bijection_params;

/* Applies a named map (thm12, fall, sigma, l124, tail, phi, p12112) or its inverse and
   verifies the result; the report lists input, output and the checks performed. */
PP_API pp_status pp_bijection(pp_context* ctx, const char* name, const char* input, const pp_bijection_params* prm,
                              int inverse, pp_text** report);

#ifdef __cplusplus
}
#endif

#endif
