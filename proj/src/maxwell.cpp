#include "dopgain/maxwell.hpp"

#include <cmath>
#include <stdexcept>

namespace dopgain {

namespace {
constexpr double kSqrt6OverPi = 1.381976597885341917061461;  // sqrt(6/pi)
constexpr double kSqrt3Half = 1.224744871391589049098642;    // sqrt(3/2)

void check_args(double dgd_ps, double pmd_rms_ps) {
    if (!(std::isfinite(pmd_rms_ps) && pmd_rms_ps > 0.0))
        throw std::domain_error("maxwell: pmd_rms must be positive and finite");
    if (!(std::isfinite(dgd_ps) && dgd_ps >= 0.0))
        throw std::domain_error("maxwell: dgd must be >= 0 and finite");
}
}  // namespace

double maxwell_pdf(double dgd_ps, double pmd_rms_ps) {
    check_args(dgd_ps, pmd_rms_ps);
    const double r = dgd_ps / pmd_rms_ps;
    return 3.0 * kSqrt6OverPi * r * r / pmd_rms_ps * std::exp(-1.5 * r * r);
}

double maxwell_cdf(double dgd_ps, double pmd_rms_ps) {
    check_args(dgd_ps, pmd_rms_ps);
    const double r = dgd_ps / pmd_rms_ps;
    return std::erf(kSqrt3Half * r) - kSqrt6OverPi * r * std::exp(-1.5 * r * r);
}

double sample_dgd(double pmd_rms_ps, RngStream& rng) {
    if (!(std::isfinite(pmd_rms_ps) && pmd_rms_ps > 0.0))
        throw std::domain_error("sample_dgd: pmd_rms must be positive and finite");
    const double s = pmd_rms_ps / std::sqrt(3.0);
    const double gx = s * rng.normal();
    const double gy = s * rng.normal();
    const double gz = s * rng.normal();
    return std::sqrt(gx * gx + gy * gy + gz * gz);
}

}  // namespace dopgain
