#pragma once

// Adaptive quadrature for the improper integrals
//   I(p, beta) = int_0^inf t^p exp(-t^2/2 + beta t) dt,   p > -1,
// which define the buy-low-sell-high fundamental solutions.  The integrable
// endpoint singularity for p in (-1, 0) is removed by the substitution
// t = s^{1/lambda} on [0, 1]; the far tail is truncated where the integrand
// drops below 1e-18 of its peak.

#include <functional>

namespace ambiswitch {

/// Adaptive Simpson integration of f over [a, b] to relative tolerance
/// rel_tol (with an absolute floor abs_floor against zero integrals).
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-12, double abs_floor = 1e-300);

/// I(p, beta) = int_0^inf t^p exp(-t^2/2 + beta t) dt to ~1e-10 relative.
double gaussian_power_integral(double p, double beta);

}  // namespace ambiswitch
