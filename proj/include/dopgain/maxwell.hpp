#pragma once

#include "dopgain/rng.hpp"

namespace dopgain {

/// Maxwell density of the differential group delay:
///   rho(x) = 3 sqrt(6/pi) x^2 / pmd_rms^3 * exp(-3 x^2 / 2 pmd_rms^2).
/// Normalized on [0, inf) with rms equal to pmd_rms.
double maxwell_pdf(double dgd_ps, double pmd_rms_ps);

/// Cumulative form of maxwell_pdf, erf-based.
double maxwell_cdf(double dgd_ps, double pmd_rms_ps);

/// Draws one DGD as the Euclidean norm of three independent zero-mean
/// Gaussians of standard deviation pmd_rms / sqrt(3).
double sample_dgd(double pmd_rms_ps, RngStream& rng);

}  // namespace dopgain
