#include "dopgain/bayes.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "dopgain/quadrature.hpp"

namespace dopgain {

namespace {

constexpr double kDensityFloor = 1e-300;
constexpr double kDegenerateOutcome = 1e-15;

// prior * likelihood pointwise, plus its trapezoidal mass P_outcome
std::pair<std::vector<double>, double> weighted_density(const DopPrior& prior,
                                                        const OutcomeModel& model,
                                                        std::size_t o) {
    const auto& like = model.likelihood[o];
    std::vector<double> w(prior.grid.size());
    for (std::size_t i = 0; i < prior.grid.size(); ++i)
        w[i] = prior.density[i] * like(prior.grid[i]);
    const double p_outcome = trapezoid(prior.grid, w);
    if (p_outcome < kDegenerateOutcome)
        throw std::runtime_error("posterior: degenerate outcome '" +
                                 model.outcomes[o] + "'");
    return {std::move(w), p_outcome};
}

}  // namespace

PosteriorDensity posterior(const DopPrior& prior, const OutcomeModel& model,
                           std::string_view outcome) {
    const std::size_t o = model.outcome_index(outcome);
    auto [density, p_outcome] = weighted_density(prior, model, o);
    for (double& d : density) d /= p_outcome;
    return {prior.grid, std::move(density), model.outcomes[o]};
}

double differential_entropy(std::span<const double> grid,
                            std::span<const double> density) {
    const double norm = trapezoid(grid, density);
    if (std::abs(norm - 1.0) > 1e-4)
        throw std::domain_error("differential_entropy: density not normalized");

    std::vector<double> integrand(density.size());
    for (std::size_t i = 0; i < density.size(); ++i) {
        const double rho = density[i];
        integrand[i] = (rho > kDensityFloor) ? rho * std::log2(rho) : 0.0;
    }
    return -trapezoid(grid, integrand);
}

GainReport mean_info_gain(const DopPrior& prior, const OutcomeModel& model) {
    GainReport report;
    report.model_label = model.label;

    const double h_prior = differential_entropy(prior.grid, prior.density);
    for (std::size_t o = 0; o < model.size(); ++o) {
        auto [post, p_o] = weighted_density(prior, model, o);
        for (double& d : post) d /= p_o;
        const double gain = h_prior - differential_entropy(prior.grid, post);
        report.p_outcome.push_back(p_o);
        report.gain_bits.push_back(gain);
        report.mean_gain_bits += p_o * gain;
    }
    return report;
}

double gain_ratio(const DopPrior& prior) {
    const double coherent = mean_info_gain(prior, coherent_model()).mean_gain_bits;
    const double incoherent = mean_info_gain(prior, incoherent_model()).mean_gain_bits;
    if (incoherent < 1e-12)
        throw std::runtime_error("gain_ratio: incoherent gain degenerate");
    return coherent / incoherent;
}

double gain_ratio(const FiberPmd& pmd, const GaussianPulse& pulse, int n_points) {
    return gain_ratio(prior_table(pmd, pulse, n_points));
}

}  // namespace dopgain
