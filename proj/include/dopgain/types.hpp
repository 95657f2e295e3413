#pragma once

#include <cmath>
#include <stdexcept>

namespace dopgain {

inline constexpr double kTwoPi = 6.283185307179586476925287;

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }

    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }

    Vec3 normalized() const {
        const double n = norm();
        if (n <= 0.0 || !std::isfinite(n))
            throw std::domain_error("Vec3::normalized: zero or non-finite vector");
        return {x / n, y / n, z / n};
    }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// Gaussian input pulse, intensity I(t) = I0 exp(-t^2 / 2 sigma^2).
/// Only the temporal spread matters for depolarization; the mean delay and
/// the overall attenuation drop out of every polarization quantity.
struct GaussianPulse {
    double sigma_ps;

    explicit GaussianPulse(double sigma_picoseconds) : sigma_ps(sigma_picoseconds) {
        if (!(std::isfinite(sigma_ps) && sigma_ps > 0.0))
            throw std::domain_error("GaussianPulse: sigma must be positive and finite");
    }
};

/// Fiber PMD strength: the rms differential group delay over realizations.
struct FiberPmd {
    double pmd_rms_ps;

    explicit FiberPmd(double pmd_rms_picoseconds) : pmd_rms_ps(pmd_rms_picoseconds) {
        if (!(std::isfinite(pmd_rms_ps) && pmd_rms_ps > 0.0))
            throw std::domain_error("FiberPmd: pmd_rms must be positive and finite");
    }
};

/// One fiber state: DGD, relative principal-state intensity split eta in
/// [-1,1], principal-state axis on the Poincare sphere, and the relative
/// optical phase between the two principal-state amplitudes.
struct PmdRealization {
    double dgd_ps;
    double eta;
    Vec3 ps_axis;
    double phase;

    PmdRealization(double dgd_picoseconds, double eta_split, const Vec3& axis,
                   double rel_phase)
        : dgd_ps(dgd_picoseconds), eta(eta_split), ps_axis(axis), phase(rel_phase) {
        if (!(std::isfinite(dgd_ps) && dgd_ps >= 0.0))
            throw std::domain_error("PmdRealization: dgd must be >= 0 and finite");
        if (!(std::isfinite(eta) && eta >= -1.0 && eta <= 1.0))
            throw std::domain_error("PmdRealization: eta must lie in [-1, 1]");
        if (std::abs(ps_axis.norm() - 1.0) > 1e-12)
            throw std::domain_error("PmdRealization: ps_axis must be a unit vector");
        if (!(std::isfinite(phase) && phase >= 0.0 && phase < kTwoPi))
            throw std::domain_error("PmdRealization: phase must lie in [0, 2*pi)");
    }
};

/// Bloch/Stokes vector of a single-photon polarization density matrix.
/// The degree of polarization is |m|.
struct BlochState {
    Vec3 m;

    explicit BlochState(const Vec3& bloch) : m(bloch) {
        if (!(m.norm() <= 1.0 + 1e-12))
            throw std::domain_error("BlochState: |m| must not exceed 1");
    }

    double dop() const { return m.norm(); }
};

}  // namespace dopgain
