#pragma once

#include "dopgain/types.hpp"

namespace dopgain {

/// Squared temporal overlap of the fast and slow pulse replicas,
/// k = exp(-dgd^2 / 4 sigma^2). Controls the coherent (off-diagonal) part of
/// the output polarization density matrix.
double coherence_factor(double dgd_ps, const GaussianPulse& pulse);

/// Degree of polarization of one fiber realization,
///   DOP = sqrt(eta^2 + (1 - eta^2) k).
/// Independent of ps_axis and phase.
double dop_of_realization(const PmdRealization& r, const GaussianPulse& pulse);

/// Unit vector perpendicular to `axis` at azimuth `phase` in the plane
/// orthogonal to axis. The in-plane frame (e1, e2) is fixed by construction:
/// e1 = normalize(axis x u) with u the coordinate axis of smallest |component|
/// along `axis`, e2 = axis x e1; the result is cos(phase) e1 + sin(phase) e2.
Vec3 transverse_unit(const Vec3& axis, double phase);

/// Bloch vector of one fiber realization,
///   M = eta * ps_axis + sqrt((1 - eta^2) k) * t(phase),
/// with t(phase) from transverse_unit. |M| equals dop_of_realization.
BlochState bloch_of_realization(const PmdRealization& r, const GaussianPulse& pulse);

}  // namespace dopgain
