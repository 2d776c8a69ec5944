/*
 * renex — extremes of observations collected at renewal times.
 *
 * C interface to the simulation and limit-law library. All functions
 * return a renex_status; on failure renex_last_error() holds a
 * human-readable message for the calling thread. Handles returned through
 * out-parameters are owned by the caller and released with the matching
 * _free function. Strings returned by accessor functions stay owned by
 * the handle they came from.
 */

#ifndef RENEX_H
#define RENEX_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define RENEX_API __declspec(dllexport)
#else
#define RENEX_API __attribute__((visibility("default")))
#endif

typedef enum renex_status {
    RENEX_OK = 0,
    RENEX_ERR_ARGUMENT = 1,       /* invalid parameter or configuration */
    RENEX_ERR_DOMAIN = 2,         /* argument outside a law's domain */
    RENEX_ERR_NONCONVERGENCE = 3, /* series failed to converge under its cap */
    RENEX_ERR_PATH_EXHAUSTED = 4, /* renewal path never exceeded the horizon */
    RENEX_ERR_PARSE = 5,          /* malformed JSON configuration */
    RENEX_ERR_INTERNAL = 6
} renex_status;

typedef enum renex_family { RENEX_GUMBEL = 0, RENEX_FRECHET = 1 } renex_family;

RENEX_API const char* renex_version(void);
RENEX_API const char* renex_status_name(renex_status status);
/* Message for the most recent failure on this thread; empty if none. */
RENEX_API const char* renex_last_error(void);

/* ---- closed-form limit laws ------------------------------------------- */

/* Q(k, x) = Gamma(k, x)/Gamma(k), integer k >= 1, x >= 0. */
RENEX_API renex_status renex_q_gamma(int k, double x, double* out);

/* Mittag-Leffler E_alpha(z), alpha in (0,1], z in [-10, 0]. */
RENEX_API renex_status renex_mittag_leffler(double alpha, double z, double* out);

/* Tail measure mass mu_G(x, inf]; alpha_x ignored for RENEX_GUMBEL. */
RENEX_API renex_status renex_tail_mass(renex_family family, double alpha_x, double x,
                                       double* out);

RENEX_API renex_status renex_finite_mean_kth_cdf(renex_family family, double alpha_x, double c,
                                                 int k, double x, double* out);

RENEX_API renex_status renex_finite_mean_top2_joint(renex_family family, double alpha_x,
                                                    double c, double x1, double x2, double* out);

/*
 * Theorem-2 order-statistic limit E[Q(k, W(c) mu_G(x, inf])], estimated over
 * n_mc exact hitting-time draws. out_mc / out_stderr / out_series may each
 * be NULL; out_series (the k = 1 Mittag-Leffler closed form) is written
 * only when k == 1.
 */
RENEX_API renex_status renex_infinite_mean_kth_cdf(renex_family family, double alpha_x,
                                                   double alpha, double c, int k, double x,
                                                   uint64_t n_mc, uint64_t seed, double* out_mc,
                                                   double* out_stderr, double* out_series);

/* Product-form fdd of the G-extremal process over len path times. */
RENEX_API renex_status renex_g_extremal_fdd(renex_family family, double alpha_x, const double* s,
                                            const double* x, size_t len, double* out);

/* ---- samplers ---------------------------------------------------------- */

/* n positive stable draws with E[exp(-l S)] = exp(-l^alpha), alpha in (0,1). */
RENEX_API renex_status renex_sample_stable(double alpha, uint64_t n, uint64_t master_seed,
                                           uint64_t replication, double* out);

/* n exact hitting-time draws W(1) = S^{-alpha} / Gamma(1-alpha). */
RENEX_API renex_status renex_sample_hitting_w1(double alpha, uint64_t n, uint64_t master_seed,
                                               uint64_t replication, double* out);

/* ---- experiments -------------------------------------------------------- */

typedef struct renex_experiment renex_experiment;
typedef struct renex_report renex_report;

/*
 * Experiment configuration as JSON, e.g.
 *   {"regime":"finite","obs":{"law":"exp"},"steps":{"law":"exp","mu":2.0},
 *    "t":1e4,"c":1.0,"k_max":2,"reps":100000,"seed":7,"grid":[-1,0,1,2]}
 * Optional: "dependent" (bool), "fdd_s"/"fdd_x" (arrays), "n_mc",
 * "z_crit", "ks_crit", "threads".
 */
RENEX_API renex_status renex_experiment_from_json(const char* json_text,
                                                  renex_experiment** out);
RENEX_API void renex_experiment_free(renex_experiment* experiment);

RENEX_API renex_status renex_experiment_run(const renex_experiment* experiment,
                                            renex_report** out);

/* Deterministic report JSON (schema renex-report-v1); owned by the report. */
RENEX_API const char* renex_report_json(const renex_report* report);
RENEX_API int renex_report_passed(const renex_report* report);
RENEX_API void renex_report_free(renex_report* report);

/*
 * Built-in verification suite with fixed seeds; the returned report JSON
 * (schema renex-verify-v1) lists one row per criterion.
 */
RENEX_API renex_status renex_verify_run(int quick, uint64_t master_seed, renex_report** out);

#ifdef __cplusplus
}
#endif

#endif /* RENEX_H */
