#pragma once

#include <cstdint>
#include <vector>

#include "dopgain/measurement.hpp"
#include "dopgain/rng.hpp"
#include "dopgain/types.hpp"

namespace dopgain {

/// A sampled PMD ensemble with the DOP of every realization. Realizations
/// and DOPs are index-paired; the whole sample is a pure function of
/// (n, pmd, pulse, seed).
struct EnsembleSample {
    std::vector<PmdRealization> realizations;
    std::vector<double> dops;
    std::uint64_t seed = 0;
};

/// Mutual-information estimate with its standard error, in bits.
struct MutualInfoEstimate {
    double bits;
    double std_error;
};

/// Uniform point on the sphere from three normalized Gaussian draws.
Vec3 sample_unit_vector(RngStream& rng);

/// Draws n independent realizations: DGD from sample_dgd, eta uniform on
/// [-1, 1], ps_axis uniform on the sphere, phase uniform on [0, 2*pi).
/// Generation runs in fixed-size chunks with per-chunk substreams of the
/// master seed, so the result is identical for any thread count.
EnsembleSample sample_ensemble(std::int64_t n, const FiberPmd& pmd,
                               const GaussianPulse& pulse, std::uint64_t seed);

/// Fraction of sampled DOPs >= m.
double empirical_survival(const EnsembleSample& sample, double m);

/// Normalized histogram of the sampled DOPs on `bins` equal cells of [0, 1].
std::vector<double> empirical_histogram(const EnsembleSample& sample, int bins);

/// Monte Carlo mutual information between the outcome and the DOP:
/// P_hat_o is the sample average of P(o|M); the estimate is the sample
/// average of sum_o P(o|M) log2(P(o|M) / P_hat_o), with its standard error.
/// Averaging the exact conditional likelihoods over sampled M avoids any
/// histogram bias.
MutualInfoEstimate mutual_information_mc(const EnsembleSample& sample,
                                         const OutcomeModel& model);

}  // namespace dopgain
