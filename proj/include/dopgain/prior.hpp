#pragma once

#include <vector>

#include "dopgain/types.hpp"

namespace dopgain {

/// Tabulated a-priori density of the degree of polarization on a grid over
/// [0, 1]. pmd_rms_ps is +infinity for the asymptotic uniform prior.
struct DopPrior {
    std::vector<double> grid;
    std::vector<double> density;
    double pmd_rms_ps;
    double sigma_ps;
};

/// Prob(DOP >= m) under the PMD ensemble:
///   S(m) = integral_0^inf maxwell(x) * (1 - eta_min(m, x)) dx,
/// eta_min = sqrt(max{0, (m^2 - k) / (1 - k)}), k = coherence_factor(x).
/// Monotone non-increasing; S(0) = 1, S(1) = 0.
double survival(double m, const FiberPmd& pmd, const GaussianPulse& pulse);

/// A-priori DOP density rho(m) = -dS/dm, evaluated by differentiating the
/// survival integrand under the integral sign:
///   rho(m) = integral_{x_min(m)}^inf maxwell(x) * m / sqrt((1-k)(m^2-k)) dx,
/// x_min(m) = 2 sigma sqrt(ln(1/m^2)). Defined on (0, 1]; m = 0 is a domain
/// error (use the one-sided limit, as prior_table does).
double prior_density(double m, const FiberPmd& pmd, const GaussianPulse& pulse);

/// Materializes prior_density on a uniform n_points grid over [0, 1].
/// density[0] holds the one-sided limit m -> 0+. Requires n_points >= 101.
DopPrior prior_table(const FiberPmd& pmd, const GaussianPulse& pulse, int n_points);

/// Asymptotic large-PMD prior: the DOP becomes |eta|, uniform on [0, 1].
DopPrior uniform_prior(int n_points);

}  // namespace dopgain
