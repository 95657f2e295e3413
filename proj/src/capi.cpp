#include "dopgain.h"

#include <new>
#include <stdexcept>
#include <string>

#include "dopgain/bayes.hpp"
#include "dopgain/depolarize.hpp"
#include "dopgain/maxwell.hpp"
#include "dopgain/measurement.hpp"
#include "dopgain/monte_carlo.hpp"
#include "dopgain/prior.hpp"
#include "dopgain/validate.hpp"

struct dop_prior {
    dopgain::DopPrior table;
};

struct dop_ensemble {
    dopgain::EnsembleSample sample;
};

namespace {

thread_local std::string g_last_error;

dop_status fail(dop_status status, const char* message) {
    g_last_error = message;
    return status;
}

// Maps core exceptions onto status codes at the C boundary.
template <class Fn>
dop_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return DOP_OK;
    } catch (const std::domain_error& e) {
        return fail(DOP_ERR_DOMAIN, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(DOP_ERR_BADARG, e.what());
    } catch (const std::bad_alloc&) {
        return fail(DOP_ERR_ALLOC, "allocation failed");
    } catch (const std::runtime_error& e) {
        return fail(DOP_ERR_DEGENERATE, e.what());
    } catch (const std::exception& e) {
        return fail(DOP_ERR_INTERNAL, e.what());
    }
}

dop_status scalar_out(double* out, double value) {
    *out = value;
    return DOP_OK;
}

dopgain::OutcomeModel model_of(dop_model model) {
    if (model == DOP_MODEL_COHERENT) return dopgain::coherent_model();
    if (model == DOP_MODEL_INCOHERENT) return dopgain::incoherent_model();
    throw std::invalid_argument("unknown outcome model id");
}

}  // namespace

extern "C" {

const char* dop_version(void) { return "0.1.0"; }

const char* dop_status_name(dop_status status) {
    switch (status) {
        case DOP_OK: return "ok";
        case DOP_ERR_DOMAIN: return "domain error";
        case DOP_ERR_DEGENERATE: return "degenerate input";
        case DOP_ERR_BADARG: return "bad argument";
        case DOP_ERR_ALLOC: return "allocation failure";
        case DOP_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* dop_last_error(void) { return g_last_error.c_str(); }

dop_status dop_maxwell_pdf(double dgd_ps, double pmd_rms_ps, double* out) {
    if (!out) return fail(DOP_ERR_BADARG, "out is null");
    return guarded([&] { scalar_out(out, dopgain::maxwell_pdf(dgd_ps, pmd_rms_ps)); });
}

dop_status dop_maxwell_cdf(double dgd_ps, double pmd_rms_ps, double* out) {
    if (!out) return fail(DOP_ERR_BADARG, "out is null");
    return guarded([&] { scalar_out(out, dopgain::maxwell_cdf(dgd_ps, pmd_rms_ps)); });
}

dop_status dop_coherence_factor(double dgd_ps, double sigma_ps, double* out) {
    if (!out) return fail(DOP_ERR_BADARG, "out is null");
    return guarded([&] {
        scalar_out(out, dopgain::coherence_factor(dgd_ps, dopgain::GaussianPulse(sigma_ps)));
    });
}

dop_status dop_realization_dop(double dgd_ps, double eta, double sigma_ps,
                               double* out) {
    if (!out) return fail(DOP_ERR_BADARG, "out is null");
    return guarded([&] {
        const dopgain::PmdRealization r(dgd_ps, eta, {0.0, 0.0, 1.0}, 0.0);
        scalar_out(out, dopgain::dop_of_realization(r, dopgain::GaussianPulse(sigma_ps)));
    });
}

dop_status dop_survival(double m, double pmd_rms_ps, double sigma_ps, double* out) {
    if (!out) return fail(DOP_ERR_BADARG, "out is null");
    return guarded([&] {
        scalar_out(out, dopgain::survival(m, dopgain::FiberPmd(pmd_rms_ps),
                                          dopgain::GaussianPulse(sigma_ps)));
    });
}

dop_status dop_prior_density(double m, double pmd_rms_ps, double sigma_ps,
                             double* out) {
    if (!out) return fail(DOP_ERR_BADARG, "out is null");
    return guarded([&] {
        scalar_out(out, dopgain::prior_density(m, dopgain::FiberPmd(pmd_rms_ps),
                                               dopgain::GaussianPulse(sigma_ps)));
    });
}

dop_status dop_p_singlet(double m, double* out) {
    if (!out) return fail(DOP_ERR_BADARG, "out is null");
    return guarded([&] { scalar_out(out, dopgain::p_singlet(m)); });
}

dop_status dop_p_triplet(double m, double* out) {
    if (!out) return fail(DOP_ERR_BADARG, "out is null");
    return guarded([&] { scalar_out(out, dopgain::p_triplet(m)); });
}

dop_status dop_p_same(double m, double* out) {
    if (!out) return fail(DOP_ERR_BADARG, "out is null");
    return guarded([&] { scalar_out(out, dopgain::p_same(m)); });
}

dop_status dop_prior_create(double pmd_rms_ps, double sigma_ps, int grid_points,
                            dop_prior** out) {
    if (!out) return fail(DOP_ERR_BADARG, "out is null");
    *out = nullptr;
    return guarded([&] {
        auto table = dopgain::prior_table(dopgain::FiberPmd(pmd_rms_ps),
                                          dopgain::GaussianPulse(sigma_ps), grid_points);
        *out = new dop_prior{std::move(table)};
    });
}

dop_status dop_prior_create_uniform(int grid_points, dop_prior** out) {
    if (!out) return fail(DOP_ERR_BADARG, "out is null");
    *out = nullptr;
    return guarded([&] { *out = new dop_prior{dopgain::uniform_prior(grid_points)}; });
}

void dop_prior_free(dop_prior* prior) { delete prior; }

int dop_prior_points(const dop_prior* prior) {
    return prior ? static_cast<int>(prior->table.grid.size()) : 0;
}

dop_status dop_prior_row(const dop_prior* prior, int index, double* m,
                         double* density) {
    if (!prior || !m || !density) return fail(DOP_ERR_BADARG, "null argument");
    if (index < 0 || index >= static_cast<int>(prior->table.grid.size()))
        return fail(DOP_ERR_BADARG, "row index out of range");
    *m = prior->table.grid[index];
    *density = prior->table.density[index];
    return DOP_OK;
}

dop_status dop_info_gain(const dop_prior* prior, dop_model model,
                         dop_gain_report* out) {
    if (!prior || !out) return fail(DOP_ERR_BADARG, "null argument");
    return guarded([&] {
        const dopgain::GainReport report =
            dopgain::mean_info_gain(prior->table, model_of(model));
        for (int o = 0; o < 2; ++o) {
            out->p_outcome[o] = report.p_outcome[o];
            out->gain_bits[o] = report.gain_bits[o];
        }
        out->mean_gain_bits = report.mean_gain_bits;
    });
}

dop_status dop_gain_ratio(const dop_prior* prior, double* out) {
    if (!prior || !out) return fail(DOP_ERR_BADARG, "null argument");
    return guarded([&] { scalar_out(out, dopgain::gain_ratio(prior->table)); });
}

dop_status dop_ensemble_create(int64_t count, double pmd_rms_ps, double sigma_ps,
                               uint64_t seed, dop_ensemble** out) {
    if (!out) return fail(DOP_ERR_BADARG, "out is null");
    *out = nullptr;
    return guarded([&] {
        auto sample = dopgain::sample_ensemble(count, dopgain::FiberPmd(pmd_rms_ps),
                                               dopgain::GaussianPulse(sigma_ps), seed);
        *out = new dop_ensemble{std::move(sample)};
    });
}

void dop_ensemble_free(dop_ensemble* ensemble) { delete ensemble; }

int64_t dop_ensemble_size(const dop_ensemble* ensemble) {
    return ensemble ? static_cast<int64_t>(ensemble->sample.dops.size()) : 0;
}

dop_status dop_ensemble_survival(const dop_ensemble* ensemble, double m,
                                 double* out) {
    if (!ensemble || !out) return fail(DOP_ERR_BADARG, "null argument");
    return guarded(
        [&] { scalar_out(out, dopgain::empirical_survival(ensemble->sample, m)); });
}

dop_status dop_ensemble_histogram(const dop_ensemble* ensemble, int bins,
                                  double* out_density) {
    if (!ensemble || !out_density) return fail(DOP_ERR_BADARG, "null argument");
    return guarded([&] {
        const std::vector<double> hist =
            dopgain::empirical_histogram(ensemble->sample, bins);
        for (int b = 0; b < bins; ++b) out_density[b] = hist[b];
    });
}

dop_status dop_ensemble_mutual_information(const dop_ensemble* ensemble,
                                           dop_model model, double* out_bits,
                                           double* out_std_error) {
    if (!ensemble || !out_bits || !out_std_error)
        return fail(DOP_ERR_BADARG, "null argument");
    return guarded([&] {
        const dopgain::MutualInfoEstimate estimate =
            dopgain::mutual_information_mc(ensemble->sample, model_of(model));
        *out_bits = estimate.bits;
        *out_std_error = estimate.std_error;
    });
}

void dop_validate_config_init(dop_validate_config* config) {
    if (!config) return;
    config->sigma_ps = 10.0;
    config->grid_points = 2001;
    config->samples = 1'000'000;
    config->seed = 1;
    config->inject_fault = nullptr;
}

dop_status dop_validate_run(const dop_validate_config* config,
                            dop_check_callback callback, void* user,
                            int* out_all_passed) {
    if (!config || !out_all_passed) return fail(DOP_ERR_BADARG, "null argument");
    *out_all_passed = 0;
    return guarded([&] {
        dopgain::ValidationConfig cfg;
        cfg.sigma_ps = config->sigma_ps;
        cfg.grid_points = config->grid_points;
        cfg.samples = config->samples;
        cfg.seed = config->seed;
        if (config->inject_fault) cfg.inject_fault = config->inject_fault;

        const auto results = dopgain::run_validation(cfg);
        for (const auto& r : results)
            if (callback)
                callback(r.name.c_str(), r.passed ? 1 : 0, r.observed, r.bound,
                         r.detail.c_str(), user);
        *out_all_passed = dopgain::all_passed(results) ? 1 : 0;
    });
}

}  // extern "C"
