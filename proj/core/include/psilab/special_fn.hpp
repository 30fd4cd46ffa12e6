#pragma once

#include <complex>

namespace psilab {

using Complex = std::complex<double>;

/// Γ(z) for complex z.
///
/// Lanczos approximation evaluated in logarithmic form, with the reflection
/// formula Γ(z)Γ(1-z) = π / sin(πz) for Re z < 1/2. Relative error stays
/// below 1e-12 on 0.1 <= |z| <= 50.
///
/// Throws PoleError when z is within 1e-12 of 0, -1, -2, ...
Complex complex_gamma(Complex z);

/// log Γ(z) on the principal branch of the Lanczos form; Re z >= 1/2 only.
Complex log_gamma_right(Complex z);

/// Riemann ζ(z) on Re z > 0, |z - 1| > 1e-8.
///
/// Computed from the alternating Dirichlet eta series with Borwein's
/// Chebyshev-weighted acceleration, ζ(z) = η(z) / (1 - 2^{1-z}). The number
/// of terms grows with |Im z| so that relative error stays below 1e-10 on
/// 0 < Re z <= 10, |Im z| <= 50. Accuracy degrades close to the zeros of
/// 1 - 2^{1-z} on Re z = 1, where η vanishes as well.
///
/// Throws PoleError near z = 1 and DomainError for Re z <= 0.
Complex reference_zeta(Complex z);

/// x^{-z} on the principal branch; requires x > 0 (DomainError otherwise).
Complex complex_power(double x, Complex z);

inline constexpr double kGammaPoleGuard = 1e-12;
inline constexpr double kZetaPoleGuard = 1e-8;

}  // namespace psilab
