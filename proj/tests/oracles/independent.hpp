#pragma once

// Test-only oracles. None of these call into the library.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

namespace psilab::oracle {

/// Composite Simpson rule with `intervals` (even) subintervals.
inline double simpson(const std::function<double(double)>& f, double a, double b, int intervals) {
    const double h = (b - a) / intervals;
    double acc = f(a) + f(b);
    for (int i = 1; i < intervals; ++i) acc += (i % 2 == 1 ? 4.0 : 2.0) * f(a + i * h);
    return acc * h / 3.0;
}

/// Γ(1/2) = ∫_0^∞ t^{-1/2} e^{-t} dt = 2 ∫_0^∞ e^{-u²} du after t = u².
inline double gamma_half_by_quadrature() {
    return 2.0 * simpson([](double u) { return std::exp(-u * u); }, 0.0, 12.0, 24000);
}

/// Enclosure of ζ(s), real s > 1, from the partial sum S_N and the integral tail bounds
/// ∫_{N+1}^∞ t^{-s} <= Σ_{n>N} n^{-s} <= ∫_N^∞ t^{-s}.
struct Enclosure {
    double lo;
    double hi;
};
inline Enclosure zeta_enclosure(double s, long long n_terms) {
    double sum = 0.0;
    for (long long n = n_terms; n >= 1; --n) sum += std::pow(static_cast<double>(n), -s);
    const double big_n = static_cast<double>(n_terms);
    return {sum + std::pow(big_n + 1.0, 1.0 - s) / (s - 1.0), sum + std::pow(big_n, 1.0 - s) / (s - 1.0)};
}

/// Σ_{n=1}^{count} (n + x)^{-s}, summed from the small end up.
inline double brute_force_psi(double s, double x, long long count) {
    double sum = 0.0;
    for (long long n = count; n >= 1; --n) sum += std::pow(static_cast<double>(n) + x, -s);
    return sum;
}

/// x^{-z} evaluated in long double.
inline std::complex<double> power_extended(double x, std::complex<double> z) {
    const long double lx = std::log(static_cast<long double>(x));
    const long double mag = std::exp(-static_cast<long double>(z.real()) * lx);
    const long double arg = -static_cast<long double>(z.imag()) * lx;
    return {static_cast<double>(mag * std::cos(arg)), static_cast<double>(mag * std::sin(arg))};
}

}  // namespace psilab::oracle
