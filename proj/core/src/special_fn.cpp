#include "psilab/special_fn.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "psilab/errors.hpp"

namespace psilab {

namespace {

constexpr double kPi = std::numbers::pi;

// Godfrey's coefficients, g = 607/128, 15 terms.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosCoeffs = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

void guard_gamma_pole(Complex z) {
    if (z.real() > 0.5) return;
    const double nearest = std::round(z.real());
    if (nearest <= 0.0 && std::abs(z - Complex(nearest, 0.0)) < kGammaPoleGuard) {
        throw PoleError("complex_gamma: argument within pole guard of non-positive integer");
    }
}

}  // namespace

Complex log_gamma_right(Complex z) {
    if (z.real() < 0.5) throw DomainError("log_gamma_right: requires Re z >= 1/2");
    const Complex zm1 = z - 1.0;
    Complex sum = kLanczosCoeffs[0];
    for (std::size_t k = 1; k < kLanczosCoeffs.size(); ++k) {
        sum += kLanczosCoeffs[k] / (zm1 + static_cast<double>(k));
    }
    const Complex t = zm1 + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * kPi) + (zm1 + 0.5) * std::log(t) - t + std::log(sum);
}

Complex complex_gamma(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError("complex_gamma: non-finite argument");
    }
    guard_gamma_pole(z);
    if (z.real() < 0.5) {
        // Γ(z) = π / (sin(πz) Γ(1-z))
        return kPi / (std::sin(kPi * z) * std::exp(log_gamma_right(1.0 - z)));
    }
    return std::exp(log_gamma_right(z));
}

namespace {

Complex eta_over_factor(Complex z) {

    // Borwein: |error| ~ (3 + sqrt 8)^{-n} (1 + 2|t|) e^{π|t|/2}, relative to η.
    const double t = std::abs(z.imag());
    const double log_rate = std::log(3.0 + std::sqrt(8.0));
    const double need = std::log(1e18) + 0.5 * kPi * t + std::log(3.0 * (1.0 + 2.0 * t));
    const int n = std::min(400, static_cast<int>(std::ceil(need / log_rate)) + 2);

    // terms[i] = n (n+i-1)! 4^i / ((n-i)! (2i)!), d_k = sum_{i<=k} terms[i].
    std::vector<double> terms(static_cast<std::size_t>(n) + 1);
    terms[0] = 1.0;
    for (int i = 1; i <= n; ++i) {
        terms[i] = terms[i - 1] * 4.0 * (n + i - 1.0) * (n - i + 1.0) / ((2.0 * i) * (2.0 * i - 1.0));
    }
    // tail[k] = d_n - d_k, accumulated from the top to keep the small weights exact.
    std::vector<double> tail(static_cast<std::size_t>(n) + 1, 0.0);
    for (int k = n - 1; k >= 0; --k) tail[k] = tail[k + 1] + terms[k + 1];
    const double d_n = tail[0] + terms[0];

    Complex eta = 0.0;
    for (int k = n - 1; k >= 0; --k) {
        const double weight = tail[k] / d_n;
        const Complex term = weight * complex_power(k + 1.0, z);
        eta += (k % 2 == 0) ? term : -term;
    }
    return eta / (1.0 - std::exp((1.0 - z) * std::numbers::ln2));
}

}  // namespace

Complex reference_zeta(Complex z) {
    if (!(z.real() > 0.0)) throw DomainError("reference_zeta: requires Re z > 0");
    if (std::abs(z - 1.0) <= kZetaPoleGuard) throw PoleError("reference_zeta: z too close to 1");

    // Away from 1 + 2πik/ln 2 (k != 0) the eta quotient is well conditioned.
    const Complex factor = 1.0 - std::exp((1.0 - z) * std::numbers::ln2);
    if (std::abs(factor) >= 0.05 || std::abs(z - 1.0) < 0.5) return eta_over_factor(z);

    // Otherwise η and the factor vanish together; use the mean value of ζ on a
    // circle around z, which stays clear of those points and of the pole.
    constexpr int kNodes = 64;
    constexpr double kRadius = 0.25;
    Complex sum = 0.0;
    for (int j = 0; j < kNodes; ++j) {
        sum += eta_over_factor(z + std::polar(kRadius, 2.0 * kPi * j / kNodes));
    }
    return sum / static_cast<double>(kNodes);
}

Complex complex_power(double x, Complex z) {
    if (!(x > 0.0)) throw DomainError("complex_power: requires x > 0");
    if (x == 1.0) return {1.0, 0.0};
    const double lx = std::log(x);
    return std::polar(std::exp(-z.real() * lx), -z.imag() * lx);
}

}  // namespace psilab
