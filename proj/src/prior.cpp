#include "dopgain/prior.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "dopgain/maxwell.hpp"
#include "dopgain/quadrature.hpp"

namespace dopgain {

namespace {

// Both integrals below run over the DGD region where the realization can
// reach DOP >= m, i.e. where k(x) <= m^2. Near the lower endpoint
// x_min (k = m^2) the density integrand carries an integrable
// 1/sqrt(m^2 - k) singularity, so that neighbourhood is integrated in the
// substituted variable u = sqrt(m^2 - k), where the integrand is bounded:
//   x(u)  = 2 sigma sqrt(-ln(m^2 - u^2)),
//   dx/du = 4 sigma^2 u / (x k).
// The u-piece ends where k drops to m^2/4; beyond that the raw integrand is
// smooth and is integrated in x directly. The x integral is truncated
// 6 pmd_rms past x_min (Maxwell tail mass < 1e-20).
struct PriorGeometry {
    double x_min;    // lower integration endpoint in x
    double x_split;  // u-piece / x-piece boundary
    double x_cap;    // truncation point
    double u_max;    // u value at x_split
    double one_minus_m2;

    PriorGeometry(double m, double pmd_rms, double sigma) {
        x_min = (m < 1.0) ? 2.0 * sigma * std::sqrt(-2.0 * std::log(m)) : 0.0;
        x_cap = x_min + 6.0 * pmd_rms;
        // k(x_split) = m^2 / 4
        x_split = std::min(2.0 * sigma * std::sqrt(2.0 * std::log(2.0 / m)), x_cap);
        const double k_split = std::exp(-x_split * x_split / (4.0 * sigma * sigma));
        u_max = std::sqrt(std::max(m * m - k_split, 0.0));
        one_minus_m2 = (1.0 - m) * (1.0 + m);
    }
};

double dgd_of_u(double u, double one_minus_m2, double sigma) {
    // k = m^2 - u^2 written as 1 - w to keep -ln(k) accurate for m near 1
    const double w = one_minus_m2 + u * u;
    return 2.0 * sigma * std::sqrt(-std::log1p(-w));
}

void check_m_range(double m, const char* who) {
    if (!(std::isfinite(m) && m >= 0.0 && m <= 1.0))
        throw std::domain_error(std::string(who) + ": m must lie in [0, 1]");
}

}  // namespace

double survival(double m, const FiberPmd& pmd, const GaussianPulse& pulse) {
    check_m_range(m, "survival");
    if (m == 0.0) return 1.0;
    if (m == 1.0) return 0.0;

    const double dt = pmd.pmd_rms_ps;
    const double sigma = pulse.sigma_ps;
    const PriorGeometry g(m, dt, sigma);

    // Realizations with x <= x_min have k >= m^2 and always reach DOP >= m.
    double total = maxwell_cdf(g.x_min, dt);

    if (g.u_max > 0.0) {
        total += integrate(
            [&](double u) {
                const double x = dgd_of_u(u, g.one_minus_m2, sigma);
                const double k = m * m - u * u;
                const double eta_min = u / std::sqrt(g.one_minus_m2 + u * u);
                const double dx_du = 4.0 * sigma * sigma * u / (x * k);
                return maxwell_pdf(x, dt) * (1.0 - eta_min) * dx_du;
            },
            0.0, g.u_max);
    }
    if (g.x_split < g.x_cap) {
        total += integrate(
            [&](double x) {
                const double k = std::exp(-x * x / (4.0 * sigma * sigma));
                const double eta_min = std::sqrt((m * m - k) / (1.0 - k));
                return maxwell_pdf(x, dt) * (1.0 - eta_min);
            },
            g.x_split, g.x_cap);
    }
    return total;
}

double prior_density(double m, const FiberPmd& pmd, const GaussianPulse& pulse) {
    check_m_range(m, "prior_density");
    if (m == 0.0)
        throw std::domain_error("prior_density: defined on (0, 1]; m = 0 excluded");

    const double dt = pmd.pmd_rms_ps;
    const double sigma = pulse.sigma_ps;
    const PriorGeometry g(m, dt, sigma);

    double total = 0.0;
    if (g.u_max > 0.0) {
        total += integrate(
            [&](double u) {
                const double x = dgd_of_u(u, g.one_minus_m2, sigma);
                const double k = m * m - u * u;
                // weight m / sqrt((1-k)(m^2-k)) times dx/du; m^2 - k = u^2
                return maxwell_pdf(x, dt) * 4.0 * sigma * sigma * m /
                       (std::sqrt(g.one_minus_m2 + u * u) * x * k);
            },
            0.0, g.u_max);
    }
    if (g.x_split < g.x_cap) {
        total += integrate(
            [&](double x) {
                const double k = std::exp(-x * x / (4.0 * sigma * sigma));
                return maxwell_pdf(x, dt) * m / std::sqrt((1.0 - k) * (m * m - k));
            },
            g.x_split, g.x_cap);
    }
    return total;
}

DopPrior prior_table(const FiberPmd& pmd, const GaussianPulse& pulse, int n_points) {
    if (n_points < 101)
        throw std::domain_error("prior_table: n_points must be >= 101");

    DopPrior prior;
    prior.pmd_rms_ps = pmd.pmd_rms_ps;
    prior.sigma_ps = pulse.sigma_ps;
    prior.grid.resize(n_points);
    prior.density.resize(n_points);

    const double step = 1.0 / (n_points - 1);
    prior.grid.front() = 0.0;
    prior.density.front() = prior_density(1e-6, pmd, pulse);  // one-sided limit
    for (int i = 1; i < n_points; ++i) {
        const double m = (i == n_points - 1) ? 1.0 : i * step;
        prior.grid[i] = m;
        prior.density[i] = prior_density(m, pmd, pulse);
    }
    return prior;
}

DopPrior uniform_prior(int n_points) {
    if (n_points < 101)
        throw std::domain_error("uniform_prior: n_points must be >= 101");

    DopPrior prior;
    prior.pmd_rms_ps = std::numeric_limits<double>::infinity();
    prior.sigma_ps = 0.0;
    prior.grid.resize(n_points);
    prior.density.assign(n_points, 1.0);
    const double step = 1.0 / (n_points - 1);
    for (int i = 0; i < n_points; ++i)
        prior.grid[i] = (i == n_points - 1) ? 1.0 : i * step;
    return prior;
}

}  // namespace dopgain
