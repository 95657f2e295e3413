#pragma once

#include <span>
#include <string>
#include <vector>

#include "dopgain/measurement.hpp"
#include "dopgain/prior.hpp"

namespace dopgain {

/// Posterior DOP density on the prior's grid, conditioned on one outcome.
struct PosteriorDensity {
    std::vector<double> grid;
    std::vector<double> density;
    std::string conditioning_outcome;
};

/// Per-outcome marginals and information gains of one outcome model against
/// one prior, plus the outcome-averaged mean gain (the mutual information
/// between the outcome and the DOP, in bits).
struct GainReport {
    std::vector<double> p_outcome;
    std::vector<double> gain_bits;
    double mean_gain_bits = 0.0;
    std::string model_label;
};

/// Bayes update: posterior = prior * P(outcome|m) / P_outcome, with
/// P_outcome the trapezoidal marginal over the grid. Throws when
/// P_outcome < 1e-15 (degenerate outcome).
PosteriorDensity posterior(const DopPrior& prior, const OutcomeModel& model,
                           std::string_view outcome);

/// Differential entropy h = -integral rho log2(rho) dm by the trapezoidal
/// rule, with 0 log 0 := 0 (densities below 1e-300 are treated as zero).
/// The input must be normalized within 1e-4.
double differential_entropy(std::span<const double> grid,
                            std::span<const double> density);

/// Mean information gain of the model against the prior:
///   mean = h(prior) - sum_o P_o h(posterior_o),
/// with per-outcome gains h(prior) - h(posterior_o).
GainReport mean_info_gain(const DopPrior& prior, const OutcomeModel& model);

/// Ratio of coherent to incoherent mean information gain for the given
/// prior. Throws when the incoherent gain is below 1e-12.
double gain_ratio(const DopPrior& prior);

/// Convenience overload building the PMD prior at n_points first.
double gain_ratio(const FiberPmd& pmd, const GaussianPulse& pulse,
                  int n_points = 2001);

}  // namespace dopgain
