/* C interface to the dopgain library.
 *
 * The library models depolarization of Gaussian optical pulses by
 * polarization mode dispersion, derives the a-priori probability density of
 * the degree of polarization (DOP), and compares the Shannon information
 * gain of a coherent singlet-projection measurement against the best
 * incoherent two-photon measurement.
 *
 * Conventions:
 *  - all delays and spreads are in picoseconds;
 *  - every fallible function returns dop_status and writes results through
 *    out-pointers; dop_last_error() describes the most recent failure on the
 *    calling thread;
 *  - opaque handles are created and released in matching pairs; handles are
 *    immutable after creation and may be read from several threads at once.
 */

#ifndef DOPGAIN_H
#define DOPGAIN_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dop_status {
    DOP_OK = 0,
    DOP_ERR_DOMAIN = 1,     /* argument outside the documented domain */
    DOP_ERR_DEGENERATE = 2, /* degenerate outcome or vanishing gain */
    DOP_ERR_BADARG = 3,     /* null pointer or malformed argument */
    DOP_ERR_ALLOC = 4,
    DOP_ERR_INTERNAL = 5
} dop_status;

typedef enum dop_model {
    DOP_MODEL_COHERENT = 0,  /* singlet/triplet projection on the photon pair */
    DOP_MODEL_INCOHERENT = 1 /* same/different in one uniformly random basis */
} dop_model;

const char* dop_version(void);
const char* dop_status_name(dop_status status);
/* Message of the last failure on this thread; empty string if none. */
const char* dop_last_error(void);

/* --- scalar model functions ------------------------------------------- */

/* Maxwell density of the differential group delay (per picosecond). */
dop_status dop_maxwell_pdf(double dgd_ps, double pmd_rms_ps, double* out);
dop_status dop_maxwell_cdf(double dgd_ps, double pmd_rms_ps, double* out);

/* Squared temporal pulse overlap exp(-dgd^2 / 4 sigma^2). */
dop_status dop_coherence_factor(double dgd_ps, double sigma_ps, double* out);

/* DOP of one fiber realization, sqrt(eta^2 + (1 - eta^2) k). */
dop_status dop_realization_dop(double dgd_ps, double eta, double sigma_ps,
                               double* out);

/* Prob(DOP >= m) under the PMD ensemble, and its density -d/dm. */
dop_status dop_survival(double m, double pmd_rms_ps, double sigma_ps, double* out);
dop_status dop_prior_density(double m, double pmd_rms_ps, double sigma_ps,
                             double* out);

/* Outcome likelihoods at DOP m. */
dop_status dop_p_singlet(double m, double* out); /* (1 - m^2) / 4 */
dop_status dop_p_triplet(double m, double* out); /* (3 + m^2) / 4 */
dop_status dop_p_same(double m, double* out);    /* (3 + m^2) / 6 */

/* --- tabulated prior --------------------------------------------------- */

typedef struct dop_prior dop_prior;

/* Tabulates the a-priori DOP density on a uniform grid of grid_points
 * (>= 101) over [0, 1]. */
dop_status dop_prior_create(double pmd_rms_ps, double sigma_ps, int grid_points,
                            dop_prior** out);

/* Asymptotic large-PMD prior: uniform density on [0, 1]. */
dop_status dop_prior_create_uniform(int grid_points, dop_prior** out);

void dop_prior_free(dop_prior* prior);

int dop_prior_points(const dop_prior* prior);
dop_status dop_prior_row(const dop_prior* prior, int index, double* m,
                         double* density);

/* --- information gain --------------------------------------------------- */

typedef struct dop_gain_report {
    double p_outcome[2];  /* marginal outcome probabilities */
    double gain_bits[2];  /* per-outcome information gain */
    double mean_gain_bits;
} dop_gain_report;

dop_status dop_info_gain(const dop_prior* prior, dop_model model,
                         dop_gain_report* out);

/* Coherent over incoherent mean gain. */
dop_status dop_gain_ratio(const dop_prior* prior, double* out);

/* --- Monte Carlo ensemble ------------------------------------------------ */

typedef struct dop_ensemble dop_ensemble;

/* Samples `count` fiber realizations (DGD Maxwell, eta uniform on [-1, 1],
 * axis uniform on the sphere, phase uniform on [0, 2*pi)) and their DOPs.
 * Deterministic in (count, pmd_rms, sigma, seed). */
dop_status dop_ensemble_create(int64_t count, double pmd_rms_ps, double sigma_ps,
                               uint64_t seed, dop_ensemble** out);

void dop_ensemble_free(dop_ensemble* ensemble);

int64_t dop_ensemble_size(const dop_ensemble* ensemble);

/* Fraction of sampled DOPs >= m. */
dop_status dop_ensemble_survival(const dop_ensemble* ensemble, double m,
                                 double* out);

/* Normalized DOP histogram on `bins` equal cells of [0, 1]; writes `bins`
 * densities into out_density. */
dop_status dop_ensemble_histogram(const dop_ensemble* ensemble, int bins,
                                  double* out_density);

/* Monte Carlo mutual information between outcome and DOP, with standard
 * error. */
dop_status dop_ensemble_mutual_information(const dop_ensemble* ensemble,
                                           dop_model model, double* out_bits,
                                           double* out_std_error);

/* --- self validation ------------------------------------------------------ */

typedef struct dop_validate_config {
    double sigma_ps;    /* pulse spread, default 10 */
    int grid_points;    /* prior resolution, default 2001 */
    int64_t samples;    /* Monte Carlo size, default 1000000 */
    uint64_t seed;      /* master seed, default 1 */
    const char* inject_fault; /* test hook: check name to corrupt, or NULL */
} dop_validate_config;

void dop_validate_config_init(dop_validate_config* config);

/* Called once per check with its outcome. */
typedef void (*dop_check_callback)(const char* name, int passed, double observed,
                                   double bound, const char* detail, void* user);

/* Runs the full invariant suite (normalizations, Monte Carlo oracle
 * agreements, reference gain ratios). *out_all_passed is 1 iff every check
 * passed. */
dop_status dop_validate_run(const dop_validate_config* config,
                            dop_check_callback callback, void* user,
                            int* out_all_passed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DOPGAIN_H */
