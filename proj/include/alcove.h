/* Public C interface for the alcove exit-time library.
 *
 * The library computes, for a standard Brownian motion started inside the
 * fundamental alcove of an affine reflection family (A, B, C, D, G2) or the
 * order chamber of the finite permutation family, the probability that the
 * first exit time exceeds t, the expected exit time, Laplacian eigenfunctions
 * of the alcove, and both sides of a family of alternating integral
 * identities.  Deterministic answers carry certified truncation bounds;
 * simulation answers carry a standard error and are bit-reproducible for a
 * fixed seed regardless of the worker count.
 *
 * All functions are thread-compatible: distinct handles may be used from
 * distinct threads concurrently.  Error messages are per-thread; a failing
 * call stores a message retrievable with alc_last_error() until the next
 * failing call on the same thread.
 */
#ifndef ALCOVE_H
#define ALCOVE_H

#include <stdint.h>

#if defined(_WIN32)
#define ALC_API __declspec(dllexport)
#else
#define ALC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes.  The CLI maps these directly to process exit codes. */
typedef enum alc_status {
    ALC_OK = 0,
    ALC_VALIDATION_FAILED = 1, /* a validation-suite check failed */
    ALC_INVALID_INPUT = 2,     /* precondition violated (message available) */
    ALC_UNSUPPORTED = 3,       /* recognized but deliberately not served */
    ALC_INTERNAL_ERROR = 4     /* unexpected failure */
} alc_status;

/* Opaque reflection-family handle. */
typedef struct alc_datum alc_datum;

/* Common numeric result envelope. */
typedef struct alc_result {
    double value;           /* the estimate, clamped to its natural range */
    double error_bound;     /* certified truncation bound, or the standard
                               error for simulation methods */
    double exited_fraction; /* simulation methods only; 0 otherwise */
    long long terms;        /* series terms / lattice points / paths */
    char method[32];        /* e.g. "pfaffian", "image-sum", "mc" */
} alc_result;

/* Simulation controls.  alc_mc_config_default() gives
 * {paths=100000, dt=1e-4, horizon=1.0, seed=0, workers=0};
 * workers <= 0 means "use the available hardware". */
typedef struct alc_mc_config {
    long long paths;
    double dt;
    double horizon;
    uint64_t seed;
    int workers;
} alc_mc_config;

/* One factor of an alternating-integral battery: kind 0 is a gaussian with
 * mean p1 and standard deviation p2; kind 1 is the indicator of [p1, p2].
 * amp multiplies the factor. */
typedef struct alc_debruijn_factor {
    int kind;
    double p1;
    double p2;
    double amp;
} alc_debruijn_factor;

typedef struct alc_debruijn_result {
    double lhs;       /* alternating group-sum integral over the cylinder */
    double rhs;       /* Pfaffian (even k) or singlet-expansion (odd k) side */
    double lhs_bound; /* certified truncation bound for the lhs */
    long long terms;  /* group elements that survived pruning */
} alc_debruijn_result;

/* Library identification. */
ALC_API const char* alc_version(void);

/* Message for the most recent failing call on this thread ("" if none). */
ALC_API const char* alc_last_error(void);

/* Free a string returned through a char** out-parameter. */
ALC_API void alc_string_free(char* s);

/* Family handles.  family is one of "A","B","C","D","G2" (case-insensitive);
 * k is the coordinate count (A: walks >= 2; B/C: rank >= 2; D: rank >= 3;
 * G2: k must be 2).  Unsupported names ("F4", "E8", ...) give
 * ALC_UNSUPPORTED. */
ALC_API alc_status alc_datum_create(const char* family, int k, alc_datum** out);
ALC_API void alc_datum_free(alc_datum* d);

/* Ambient coordinate dimension (A with parameter k: k; G2: 3; B/C/D: k).
 * Returns -1 for a null handle. */
ALC_API int alc_datum_dimension(const alc_datum* d);

/* 1 if x (length n) lies strictly inside the fundamental alcove, 0 if not,
 * -1 on argument errors.  For the sum-zero families (A, G2) the common mean
 * of the coordinates is irrelevant and ignored, here and everywhere below. */
ALC_API int alc_point_in_alcove(const alc_datum* d, const double* x, int n);

ALC_API alc_mc_config alc_mc_config_default(void);

/* P(first exit time > t) from start x, by the family's closed form
 * (Pfaffian / signed-product).  tol <= 0 selects the default (1e-12). */
ALC_API alc_status alc_survival(const alc_datum* d, const double* x, int n,
                                double t, double tol, alc_result* out);

/* The same probability by the independent image-sum oracle (rank-2 domains:
 * A k=3, B/C 2, G2; others give ALC_UNSUPPORTED).  tol <= 0 -> 1e-9. */
ALC_API alc_status alc_survival_images(const alc_datum* d, const double* x,
                                       int n, double t, double tol,
                                       alc_result* out);

/* The same probability by direct simulation (any supported family). */
ALC_API alc_status alc_survival_mc(const alc_datum* d, const double* x, int n,
                                   double t, const alc_mc_config* cfg,
                                   alc_result* out);

/* Survival in the open order chamber x1 > ... > xk (no upper wall). */
ALC_API alc_status alc_chamber_survival(int k, const double* x, double t,
                                        double tol, alc_result* out);

/* Expected exit time.  The circular family uses the certified lattice
 * series (tol <= 0 -> 1e-8); other families integrate the survival
 * probability in time (tol <= 0 -> 1e-6, reported bound is an estimate). */
ALC_API alc_status alc_expected_exit(const alc_datum* d, const double* x,
                                     int n, double tol, alc_result* out);

/* Expected exit time by simulation; paths censored at cfg->horizon count as
 * horizon, so choose it large enough that exited_fraction is ~1. */
ALC_API alc_status alc_expected_exit_mc(const alc_datum* d, const double* x,
                                        int n, const alc_mc_config* cfg,
                                        alc_result* out);

/* Laplacian eigenfunction of the alcove at weight p evaluated at x (both
 * length n): the alternating orbit sum for neumann = 0 (Dirichlet, requires
 * a strictly dominant lattice weight) or the plain orbit sum for
 * neumann = 1 (closure-dominant weight).  Outputs: complex value, the
 * eigenvalue -4 pi^2 <p,p>, and whether the eigenfunction is real up to one
 * global constant.  Null output pointers are allowed. */
ALC_API alc_status alc_eigen(const alc_datum* d, const double* p,
                             const double* x, int n, int neumann,
                             double* value_re, double* value_im,
                             double* eigenvalue, int* is_real);

/* Both sides of the alternating integral identity for a battery of k
 * factors, 2 <= k <= 4 (the cylinder quadrature caps the count).
 * tol <= 0 -> 1e-7.  alcove_points (8 or 16, 0 -> 16) controls the
 * three-factor-slice quadrature order used at k = 4. */
ALC_API alc_status alc_debruijn(const alc_debruijn_factor* factors, int k,
                                double tol, int alcove_points,
                                alc_debruijn_result* out);

/* Run a named self-check suite: "kernels", "survival", "expected", "eigen",
 * "debruijn", "mc", or "all".  *report receives a newline-separated list of
 * "PASS name: detail" / "FAIL name: detail" lines plus a summary line (free
 * with alc_string_free).  Returns ALC_OK when every check passes,
 * ALC_VALIDATION_FAILED when any fails, ALC_INVALID_INPUT for an unknown
 * suite name. */
ALC_API alc_status alc_validate(const char* suite, char** report);

#ifdef __cplusplus
}
#endif

#endif /* ALCOVE_H */
