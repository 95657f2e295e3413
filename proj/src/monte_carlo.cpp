#include "dopgain/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "dopgain/depolarize.hpp"
#include "dopgain/maxwell.hpp"

namespace dopgain {

namespace {

constexpr std::int64_t kChunk = 1 << 15;

// Compensated (Kahan) accumulator; keeps reductions stable at n = 1e7+.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double v) {
        const double y = v - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

void fill_chunk(EnsembleSample& out, std::int64_t begin, std::int64_t end,
                RngStream rng, const FiberPmd& pmd, const GaussianPulse& pulse) {
    for (std::int64_t i = begin; i < end; ++i) {
        const double dgd = sample_dgd(pmd.pmd_rms_ps, rng);
        const double eta = rng.uniform(-1.0, 1.0);
        const Vec3 axis = sample_unit_vector(rng);
        const double phase = rng.uniform(0.0, kTwoPi);
        out.realizations.emplace_back(dgd, eta, axis, phase);
        out.dops.push_back(dop_of_realization(out.realizations.back(), pulse));
    }
}

}  // namespace

Vec3 sample_unit_vector(RngStream& rng) {
    while (true) {
        const Vec3 g{rng.normal(), rng.normal(), rng.normal()};
        const double n = g.norm();
        if (n > 1e-12) return {g.x / n, g.y / n, g.z / n};
    }
}

EnsembleSample sample_ensemble(std::int64_t n, const FiberPmd& pmd,
                               const GaussianPulse& pulse, std::uint64_t seed) {
    if (n < 1) throw std::domain_error("sample_ensemble: n must be >= 1");

    const std::int64_t n_chunks = (n + kChunk - 1) / kChunk;
    std::vector<EnsembleSample> parts(n_chunks);

    const unsigned n_threads =
        std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                        static_cast<unsigned>(n_chunks)));
    std::vector<std::thread> workers;
    workers.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) {
        workers.emplace_back([&, t] {
            for (std::int64_t c = t; c < n_chunks; c += n_threads) {
                const std::int64_t begin = c * kChunk;
                const std::int64_t end = std::min(begin + kChunk, n);
                parts[c].realizations.reserve(end - begin);
                parts[c].dops.reserve(end - begin);
                fill_chunk(parts[c], begin, end,
                           RngStream::substream(seed, static_cast<std::uint64_t>(c)),
                           pmd, pulse);
            }
        });
    }
    for (auto& w : workers) w.join();

    EnsembleSample sample;
    sample.seed = seed;
    sample.realizations.reserve(n);
    sample.dops.reserve(n);
    for (auto& part : parts) {
        sample.realizations.insert(sample.realizations.end(),
                                   part.realizations.begin(), part.realizations.end());
        sample.dops.insert(sample.dops.end(), part.dops.begin(), part.dops.end());
    }
    return sample;
}

double empirical_survival(const EnsembleSample& sample, double m) {
    if (!(std::isfinite(m) && m >= 0.0 && m <= 1.0))
        throw std::domain_error("empirical_survival: m must lie in [0, 1]");
    if (sample.dops.empty())
        throw std::invalid_argument("empirical_survival: empty sample");
    const auto count = std::count_if(sample.dops.begin(), sample.dops.end(),
                                     [m](double d) { return d >= m; });
    return static_cast<double>(count) / static_cast<double>(sample.dops.size());
}

std::vector<double> empirical_histogram(const EnsembleSample& sample, int bins) {
    if (bins < 1) throw std::domain_error("empirical_histogram: bins must be >= 1");
    if (sample.dops.empty())
        throw std::invalid_argument("empirical_histogram: empty sample");

    std::vector<double> counts(bins, 0.0);
    for (const double d : sample.dops) {
        int idx = static_cast<int>(d * bins);
        idx = std::clamp(idx, 0, bins - 1);  // DOP == 1.0 lands in the top bin
        counts[idx] += 1.0;
    }
    const double cell = 1.0 / bins;
    const double norm = 1.0 / (static_cast<double>(sample.dops.size()) * cell);
    for (double& c : counts) c *= norm;
    return counts;
}

MutualInfoEstimate mutual_information_mc(const EnsembleSample& sample,
                                         const OutcomeModel& model) {
    const std::size_t n = sample.dops.size();
    if (n == 0) throw std::invalid_argument("mutual_information_mc: empty sample");
    const std::size_t n_outcomes = model.size();

    // P_hat_o = sample mean of P(o|M); fixed sequential reduction order.
    std::vector<KahanSum> marginal(n_outcomes);
    for (const double m : sample.dops)
        for (std::size_t o = 0; o < n_outcomes; ++o)
            marginal[o].add(model.likelihood[o](m));
    std::vector<double> p_hat(n_outcomes);
    for (std::size_t o = 0; o < n_outcomes; ++o)
        p_hat[o] = marginal[o].sum / static_cast<double>(n);

    KahanSum info, info_sq;
    for (const double m : sample.dops) {
        double term = 0.0;
        for (std::size_t o = 0; o < n_outcomes; ++o) {
            const double p = model.likelihood[o](m);
            if (p > 1e-300 && p_hat[o] > 1e-300)
                term += p * std::log2(p / p_hat[o]);
        }
        info.add(term);
        info_sq.add(term * term);
    }
    const double mean = info.sum / static_cast<double>(n);
    const double var =
        std::max(0.0, info_sq.sum / static_cast<double>(n) - mean * mean);
    const double se = (n > 1) ? std::sqrt(var / static_cast<double>(n - 1)) : 0.0;
    return {mean, se};
}

}  // namespace dopgain
