#include "dopgain/validate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "dopgain/bayes.hpp"
#include "dopgain/maxwell.hpp"
#include "dopgain/measurement.hpp"
#include "dopgain/monte_carlo.hpp"
#include "dopgain/prior.hpp"
#include "dopgain/quadrature.hpp"

namespace dopgain {

namespace {

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
    char buffer[160];
    std::snprintf(buffer, sizeof(buffer), format, a, b, c);
    return buffer;
}

// Reference ratios of coherent to incoherent mean gain at sigma = 10 ps.
struct RatioTarget {
    double pmd_ps;
    double expected;
};
constexpr RatioTarget kRatioTargets[] = {{20.0, 7.08}, {30.0, 5.69}, {40.0, 5.23}};
constexpr double kUniformRatioTarget = 4.82;
constexpr double kRatioTolerance = 0.05;

double ks_statistic(std::vector<double> samples, double pmd_rms) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double cdf = maxwell_cdf(samples[i], pmd_rms);
        d = std::max(d, std::abs(cdf - static_cast<double>(i + 1) / n));
        d = std::max(d, std::abs(cdf - static_cast<double>(i) / n));
    }
    return d;
}

// Basis-averaged same-outcome probability: with p = (1 + m cos(theta)) / 2,
// average p^2 + (1-p)^2 over cos(theta) uniform on [-1, 1].
double p_same_quadrature(double m) {
    return 0.5 * integrate(
                     [m](double c) {
                         const double p = 0.5 * (1.0 + m * c);
                         return p * p + (1.0 - p) * (1.0 - p);
                     },
                     -1.0, 1.0, 1e-14, 1e-13);
}

class Suite {
public:
    explicit Suite(const ValidationConfig& config) : cfg_(config) {}

    std::vector<CheckResult> run() {
        const GaussianPulse pulse(cfg_.sigma_ps);

        for (std::size_t i = 0; i < std::size(kRatioTargets); ++i) {
            const FiberPmd pmd(kRatioTargets[i].pmd_ps);
            const DopPrior prior = prior_table(pmd, pulse, cfg_.grid_points);
            const EnsembleSample sample =
                sample_ensemble(cfg_.samples, pmd, pulse, cfg_.seed + i);
            const int tag = static_cast<int>(kRatioTargets[i].pmd_ps);

            check_prior_norm(tag, prior);
            check_survival_deciles(tag, pmd, pulse, sample);
            check_prior_mc_l1(tag, pmd, pulse, sample);
            check_gain_ratio(tag, prior, kRatioTargets[i].expected);
            if (i == 0) check_mutual_info(prior, sample);
        }

        check_gain_ratio_uniform();
        check_maxwell_rms();
        check_maxwell_ks();
        check_likelihood_identities();
        check_same_basis_oracle();
        check_coherent_dominance(pulse);
        check_prior_survival_consistency(pulse);

        inject_fault();
        return std::move(results_);
    }

private:
    void add(std::string name, bool passed, double observed, double bound,
             std::string detail) {
        results_.push_back(
            {std::move(name), passed, observed, bound, std::move(detail)});
    }

    void check_prior_norm(int tag, const DopPrior& prior) {
        const double mass = trapezoid(prior.grid, prior.density);
        const double err = std::abs(mass - 1.0);
        add("prior_norm_pmd" + std::to_string(tag), err <= 1e-4, err, 1e-4,
            fmt("trapezoid mass = %.8f", mass));
    }

    void check_survival_deciles(int tag, const FiberPmd& pmd,
                                const GaussianPulse& pulse,
                                const EnsembleSample& sample) {
        double worst = 0.0;
        double worst_m = 0.0;
        for (int d = 1; d <= 9; ++d) {
            const double m = d / 10.0;
            const double analytic = survival(m, pmd, pulse);
            const double empirical = empirical_survival(sample, m);
            const double se = std::sqrt(analytic * (1.0 - analytic) /
                                        static_cast<double>(sample.dops.size()));
            const double z = std::abs(empirical - analytic) / se;
            if (z > worst) {
                worst = z;
                worst_m = m;
            }
        }
        add("survival_deciles_pmd" + std::to_string(tag), worst <= 3.0, worst, 3.0,
            fmt("max |z| at m = %.1f", worst_m));
    }

    void check_prior_mc_l1(int tag, const FiberPmd& pmd, const GaussianPulse& pulse,
                           const EnsembleSample& sample) {
        constexpr int kBins = 100;
        const std::vector<double> hist = empirical_histogram(sample, kBins);
        double l1 = 0.0;
        for (int b = 0; b < kBins; ++b) {
            const double center = (b + 0.5) / kBins;
            l1 += std::abs(hist[b] - prior_density(center, pmd, pulse)) / kBins;
        }
        add("prior_mc_l1_pmd" + std::to_string(tag), l1 < 0.02, l1, 0.02,
            fmt("%d-bin histogram vs analytic density", kBins));
    }

    void check_gain_ratio(int tag, const DopPrior& prior, double expected) {
        const double ratio = gain_ratio(prior);
        const double rel = std::abs(ratio / expected - 1.0);
        add("gain_ratio_pmd" + std::to_string(tag), rel <= kRatioTolerance, rel,
            kRatioTolerance, fmt("ratio = %.4f, expected %.2f", ratio, expected));
    }

    void check_gain_ratio_uniform() {
        const double ratio = gain_ratio(uniform_prior(cfg_.grid_points));
        const double rel = std::abs(ratio / kUniformRatioTarget - 1.0);
        add("gain_ratio_uniform", rel <= kRatioTolerance, rel, kRatioTolerance,
            fmt("ratio = %.4f, expected %.2f", ratio, kUniformRatioTarget));
    }

    void check_mutual_info(const DopPrior& prior, const EnsembleSample& sample) {
        for (const OutcomeModel& model : {coherent_model(), incoherent_model()}) {
            const double analytic = mean_info_gain(prior, model).mean_gain_bits;
            const MutualInfoEstimate mc = mutual_information_mc(sample, model);
            const double z = std::abs(mc.bits - analytic) / mc.std_error;
            add("mutual_info_mc_" + model.label, z <= 2.0, z, 2.0,
                fmt("mc = %.6f (se %.1e), analytic = %.6f", mc.bits, mc.std_error,
                    analytic));
        }
    }

    void check_maxwell_rms() {
        constexpr double kPmd = 20.0;
        RngStream rng(cfg_.seed);
        double sum_sq = 0.0;
        for (std::int64_t i = 0; i < cfg_.samples; ++i) {
            const double x = sample_dgd(kPmd, rng);
            sum_sq += x * x;
        }
        const double rms = std::sqrt(sum_sq / static_cast<double>(cfg_.samples));
        const double rel = std::abs(rms / kPmd - 1.0);
        add("maxwell_rms", rel < 0.005, rel, 0.005,
            fmt("sample rms = %.4f, pmd_rms = %.1f", rms, kPmd));
    }

    void check_maxwell_ks() {
        constexpr double kPmd = 30.0;
        RngStream rng(cfg_.seed + 1);
        std::vector<double> samples(cfg_.samples);
        for (auto& x : samples) x = sample_dgd(kPmd, rng);
        const double d = ks_statistic(std::move(samples), kPmd);
        add("maxwell_ks", d < 0.002, d, 0.002, "KS vs analytic CDF");
    }

    void check_likelihood_identities() {
        const double err =
            std::max(std::abs(p_singlet(0.0) - 0.25), std::abs(p_singlet(1.0)));
        add("likelihood_identities", err <= 1e-15, err, 1e-15,
            "p_singlet(0) = 1/4, p_singlet(1) = 0");
    }

    void check_same_basis_oracle() {
        double worst = 0.0;
        for (const double m : {0.2, 0.5, 0.8})
            worst = std::max(worst, std::abs(p_same(m) - p_same_quadrature(m)));
        add("same_basis_oracle", worst < 1e-10, worst, 1e-10,
            "basis-averaged quadrature at m = 0.2, 0.5, 0.8");
    }

    void check_coherent_dominance(const GaussianPulse& pulse) {
        double min_gap = 1e300;
        double at_pmd = 0.0;
        for (const double pmd_ps : {10.0, 20.0, 30.0, 40.0, 100.0, 1e4}) {
            const DopPrior prior =
                prior_table(FiberPmd(pmd_ps), pulse, cfg_.grid_points);
            const double gap = mean_info_gain(prior, coherent_model()).mean_gain_bits -
                               mean_info_gain(prior, incoherent_model()).mean_gain_bits;
            if (gap < min_gap) {
                min_gap = gap;
                at_pmd = pmd_ps;
            }
        }
        add("coherent_dominance", min_gap > 0.0, min_gap, 0.0,
            fmt("min gain gap %.3e bits at pmd = %g ps", min_gap, at_pmd));
    }

    void check_prior_survival_consistency(const GaussianPulse& pulse) {
        const FiberPmd pmd(30.0);
        constexpr double kStep = 1e-5;
        double worst = 0.0;
        for (const double m : {0.3, 0.6, 0.9}) {
            const double slope =
                (survival(m + kStep, pmd, pulse) - survival(m - kStep, pmd, pulse)) /
                (2.0 * kStep);
            worst = std::max(worst, std::abs(prior_density(m, pmd, pulse) + slope));
        }
        add("prior_survival_consistency", worst < 1e-4, worst, 1e-4,
            "analytic density vs central difference of survival");
    }

    void inject_fault() {
        if (cfg_.inject_fault.empty()) return;
        bool found = false;
        for (auto& r : results_) {
            if (r.name == cfg_.inject_fault) {
                r.observed = r.bound + std::abs(r.bound) + 1.0;
                r.passed = false;
                r.detail += " [fault injected]";
                found = true;
            }
        }
        if (!found)
            throw std::invalid_argument("run_validation: unknown check '" +
                                        cfg_.inject_fault + "'");
    }

    ValidationConfig cfg_;
    std::vector<CheckResult> results_;
};

}  // namespace

std::vector<CheckResult> run_validation(const ValidationConfig& config) {
    if (config.grid_points < 101)
        throw std::domain_error("run_validation: grid_points must be >= 101");
    if (config.samples < 1)
        throw std::domain_error("run_validation: samples must be >= 1");
    return Suite(config).run();
}

}  // namespace dopgain
