/*
 * C interface to the canonical-basis library. All computations run over a
 * context created for one root system; results come back as heap-allocated
 * strings (JSON or TSV) that the caller releases with kcanon_string_free.
 *
 * Every function returns a kcanon_status; on failure a detailed message is
 * available from kcanon_last_error until the next call on the same context.
 */
#ifndef KCANON_H
#define KCANON_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct kcanon_ctx kcanon_ctx;

typedef enum {
    KCANON_OK = 0,
    KCANON_ERR_UNSUPPORTED = 1,  /* unknown root system or missing orbit table */
    KCANON_ERR_DOMINANCE = 2,    /* a weight failed a dominance precondition */
    KCANON_ERR_BAD_ARGUMENT = 3, /* malformed argument (rank, format, bounds) */
    KCANON_ERR_INTERNAL = 4      /* violated internal invariant */
} kcanon_status;

const char* kcanon_version(void);
/* Static description of a status code. */
const char* kcanon_strerror(int status);

/* system is a label like "A2" or "g2" (case-insensitive). On failure returns
 * the status and, if err_msg is non-NULL, stores a message there (caller
 * frees it with kcanon_string_free). */
int kcanon_ctx_new(const char* system, kcanon_ctx** out, char** err_msg);
void kcanon_ctx_free(kcanon_ctx* ctx);

int kcanon_ctx_rank(const kcanon_ctx* ctx);
/* Normalized label, e.g. "G2". Owned by the context. */
const char* kcanon_ctx_system(const kcanon_ctx* ctx);
/* Message from the most recent failing call on this context. Owned by the
 * context; valid until the next call. */
const char* kcanon_last_error(const kcanon_ctx* ctx);

/* format is "json" or "tsv" in all calls below. */

/* Canonical element C(lambda); weight must be dominant with rank entries. */
int kcanon_canonical(kcanon_ctx* ctx, const int64_t* weight, size_t len,
                     const char* format, char** out);

/* Expansion of e^lambda in the dominant e-basis; any integer weight. */
int kcanon_straighten(kcanon_ctx* ctx, const int64_t* weight, size_t len,
                      const char* format, char** out);

/* Graded character of C(lambda), truncated to <mu, 2 rho^vee> <= cutoff.
 * cutoff < 0 selects the default 4 * <lambda, 2 rho^vee>. */
int kcanon_gamma(kcanon_ctx* ctx, const int64_t* weight, size_t len,
                 int64_t cutoff, const char* format, char** out);

/* b-polynomial table over all dominant weights of measure <= bound.
 * threads <= 1 runs sequentially; output does not depend on threads. */
int kcanon_bmatrix(kcanon_ctx* ctx, int64_t bound, int threads,
                   const char* format, char** out);

/* Orbit classes v^{-a(O)} prod (e^0 - v^2 e^alpha) for the bundled orbits. */
int kcanon_mcgovern(kcanon_ctx* ctx, const char* format, char** out);

/* Full verification dashboard, one report per line. n_failed receives the
 * number of failing checks (may be NULL). */
int kcanon_verify(kcanon_ctx* ctx, int64_t bound, const char* format,
                  char** out, int* n_failed);

void kcanon_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* KCANON_H */
