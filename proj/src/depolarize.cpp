#include "dopgain/depolarize.hpp"

#include <cmath>
#include <stdexcept>

namespace dopgain {

double coherence_factor(double dgd_ps, const GaussianPulse& pulse) {
    if (!(std::isfinite(dgd_ps) && dgd_ps >= 0.0))
        throw std::domain_error("coherence_factor: dgd must be >= 0 and finite");
    const double q = dgd_ps / (2.0 * pulse.sigma_ps);
    return std::exp(-q * q);
}

double dop_of_realization(const PmdRealization& r, const GaussianPulse& pulse) {
    const double k = coherence_factor(r.dgd_ps, pulse);
    const double eta2 = r.eta * r.eta;
    return std::sqrt(eta2 + (1.0 - eta2) * k);
}

Vec3 transverse_unit(const Vec3& axis, double phase) {
    const double ax = std::abs(axis.x), ay = std::abs(axis.y), az = std::abs(axis.z);
    Vec3 u{0.0, 0.0, 0.0};
    if (ax <= ay && ax <= az)
        u.x = 1.0;
    else if (ay <= az)
        u.y = 1.0;
    else
        u.z = 1.0;
    const Vec3 e1 = axis.cross(u).normalized();
    const Vec3 e2 = axis.cross(e1);
    return std::cos(phase) * e1 + std::sin(phase) * e2;
}

BlochState bloch_of_realization(const PmdRealization& r, const GaussianPulse& pulse) {
    const double k = coherence_factor(r.dgd_ps, pulse);
    const double eta2 = r.eta * r.eta;
    const double transverse = std::sqrt((1.0 - eta2) * k);
    return BlochState(r.eta * r.ps_axis + transverse * transverse_unit(r.ps_axis, r.phase));
}

}  // namespace dopgain
