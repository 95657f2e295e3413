#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "dopgain/rng.hpp"

namespace dopgain {

/// Singlet-projection probability on two identically polarized photons:
/// P(singlet | m) = (1 - m^2) / 4.
double p_singlet(double m);

/// Complement of p_singlet: (3 + m^2) / 4.
double p_triplet(double m);

/// Probability that two photons measured in the same, uniformly random basis
/// give the same result: P(same | m) = (3 + m^2) / 6.
double p_same(double m);

/// Complement of p_same: (3 - m^2) / 6.
double p_different(double m);

/// A discrete outcome set with per-outcome likelihood functions m -> P(o|m).
/// For every m in [0, 1] the likelihoods lie in [0, 1] and sum to 1.
struct OutcomeModel {
    std::string label;
    std::vector<std::string> outcomes;
    std::vector<std::function<double(double)>> likelihood;

    std::size_t size() const { return outcomes.size(); }
    std::size_t outcome_index(std::string_view name) const;
};

/// Two-outcome projective model {singlet, triplet} of the coherent
/// measurement.
OutcomeModel coherent_model();

/// Binary statistic {same, different} of the optimal incoherent scheme
/// (both photons measured in one uniformly random basis).
OutcomeModel incoherent_model();

/// Draws one outcome index with the model's likelihood at m; deterministic
/// under a fixed stream. The label is model.outcomes[index].
std::size_t sample_outcome(const OutcomeModel& model, double m, RngStream& rng);

}  // namespace dopgain
