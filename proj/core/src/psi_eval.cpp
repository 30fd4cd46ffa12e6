#include "psilab/psi_eval.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "psilab/errors.hpp"
#include "psilab/quadrature.hpp"

namespace psilab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kMinShift = -1.0 + 1e-6;

// B_{2k} / (2k)! for k = 1..9.
constexpr std::array<double, 9> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
};

// Neumaier-compensated complex accumulator that also tracks the rounding budget
// of the summed terms.
class TermSum {
public:
    void add(Complex term, double rel_term_err) {
        add_real(sum_re_, comp_re_, term.real());
        add_real(sum_im_, comp_im_, term.imag());
        const double e = std::abs(term) * rel_term_err;
        err_sq_ += e * e;
    }
    Complex value() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }
    // Term errors are independent roundings; their sum grows like the 2-norm.
    double rounding() const { return 4.0 * kEps * (std::abs(value()) + std::sqrt(err_sq_)); }

private:
    static void add_real(double& sum, double& comp, double v) {
        const double t = sum + v;
        comp += (std::abs(sum) >= std::abs(v)) ? (sum - t) + v : (v - t) + sum;
        sum = t;
    }
    double sum_re_ = 0.0, comp_re_ = 0.0;
    double sum_im_ = 0.0, comp_im_ = 0.0;
    double err_sq_ = 0.0;
};

// Relative rounding of (n+x)^{-z}: the logarithm's error is amplified by |z|.
double power_rel_err(double base, Complex z) { return 1.0 + std::abs(z) * std::abs(std::log(base)); }

void require_finite(Complex z, double x, const char* who) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || !std::isfinite(x)) {
        throw DomainError(std::string(who) + ": non-finite argument");
    }
}

EvalFlag pole_flag(Complex z) {
    return std::abs(z - 1.0) < kNearPoleRadius ? EvalFlag::NearPole : EvalFlag::None;
}

}  // namespace

std::string_view to_string(Method method) {
    switch (method) {
        case Method::Series: return "series";
        case Method::EulerMaclaurin: return "em";
        case Method::Integral: return "integral";
    }
    return "unknown";
}

QuadratureSpec QuadratureSpec::defaults_for(Complex z, double tol) {
    QuadratureSpec spec;
    const double t = std::abs(z.imag());
    spec.panels = std::max(32, static_cast<int>(std::ceil(8.0 * t)));
    spec.t_max = 60.0 + 5.0 * t;
    spec.tol = tol;
    return spec;
}

void QuadratureSpec::validate() const {
    if (!(t_split > 0.0 && t_split < t_max)) throw DomainError("QuadratureSpec: need 0 < t_split < t_max");
    if (panel_order < 4) throw DomainError("QuadratureSpec: panel_order must be >= 4");
    if (panels < 8) throw DomainError("QuadratureSpec: panels must be >= 8");
    if (!(tol > 1e-15 && tol < 1e-2)) throw DomainError("QuadratureSpec: tol must lie in (1e-15, 1e-2)");
}

// ---------------------------------------------------------------------------
// Direct series

EvalResult psi_series(Complex z, double x, double tol) {
    require_finite(z, x, "psi_series");
    if (!(z.real() > 1.0)) throw DomainError("psi_series: requires Re z > 1");
    if (!(x > kMinShift)) throw DomainError("psi_series: requires x > -1");
    if (!(tol > 0.0)) throw DomainError("psi_series: tol must be positive");

    const double sigma = z.real();
    // Midpoint tail: |Σ_{n>N} f(n) - ∫_{N+1/2}^∞ f| <= C (N - 1/2 + x)^{-σ-1}.
    const double c = std::abs(z) * std::abs(z + 1.0) / (24.0 * (sigma + 1.0));
    const double base_needed = std::pow(c / (0.5 * tol), 1.0 / (sigma + 1.0));
    const double n_real = std::max(10.0, std::ceil(base_needed + 0.5 - x));
    if (n_real > static_cast<double>(kSeriesTermCap)) {
        throw NonConvergence("psi_series: required term count exceeds cap");
    }
    const auto n_terms = static_cast<long long>(n_real);

    TermSum sum;
    for (long long n = 1; n <= n_terms; ++n) {
        const double base = static_cast<double>(n) + x;
        sum.add(complex_power(base, z), power_rel_err(base, z));
    }
    const double tail_base = static_cast<double>(n_terms) + 0.5 + x;
    const Complex tail = complex_power(tail_base, z - 1.0) / (z - 1.0);
    sum.add(tail, power_rel_err(tail_base, z));

    const double bound = c * std::pow(static_cast<double>(n_terms) - 0.5 + x, -sigma - 1.0);
    EvalResult result{sum.value(), bound + sum.rounding(), Method::Series, pole_flag(z)};
    if (result.abs_err > tol) throw NonConvergence("psi_series: rounding floor exceeds tol");
    return result;
}

// ---------------------------------------------------------------------------
// Euler–Maclaurin

EvalResult psi_euler_maclaurin(Complex z, double x, int n_direct, int n_bernoulli) {
    require_finite(z, x, "psi_euler_maclaurin");
    if (!(z.real() > 0.0)) throw DomainError("psi_euler_maclaurin: requires Re z > 0");
    if (std::abs(z - 1.0) <= kSummationPoleGuard) throw PoleError("psi_euler_maclaurin: z too close to 1");
    if (!(x > kMinShift)) throw DomainError("psi_euler_maclaurin: requires x > -1");
    if (n_direct < 8) throw DomainError("psi_euler_maclaurin: n_direct must be >= 8");
    if (n_bernoulli < 1 || n_bernoulli > 8) throw DomainError("psi_euler_maclaurin: n_bernoulli must be in [1, 8]");

    TermSum sum;
    for (int n = 1; n <= n_direct; ++n) {
        const double base = n + x;
        sum.add(complex_power(base, z), power_rel_err(base, z));
    }
    const double a = n_direct + x;
    const double rel = power_rel_err(a, z);
    const Complex a_pow = complex_power(a, z);  // a^{-z}
    sum.add(a_pow * a / (z - 1.0), rel);
    sum.add(-0.5 * a_pow, rel);

    // Correction k: B_{2k}/(2k)! (z)_{2k-1} a^{1-z-2k}, with (z)_j the rising factorial.
    Complex rising = z;
    Complex a_factor = a_pow / a;
    Complex omitted = 0.0;
    for (int k = 1; k <= n_bernoulli + 1; ++k) {
        const Complex term = kBernoulliOverFactorial[k - 1] * rising * a_factor;
        if (k <= n_bernoulli) {
            sum.add(term, rel);
        } else {
            omitted = term;
        }
        rising *= (z + (2.0 * k - 1.0)) * (z + 2.0 * k);
        a_factor /= a * a;
    }
    return {sum.value(), std::abs(omitted) + sum.rounding(), Method::EulerMaclaurin, pole_flag(z)};
}

EvalResult psi_euler_maclaurin(Complex z, double x) {
    // Corrections shrink like ((|z| + 2k) / (2π(N + x)))^{2k}; aim for a ratio near 0.1.
    const double target = 1.6 * (std::abs(z) + 17.0) - x;
    const int n_direct = std::max(8, static_cast<int>(std::ceil(std::min(target, 1e7))));
    return psi_euler_maclaurin(z, x, n_direct, 8);
}

// ---------------------------------------------------------------------------
// Integral representation

namespace {

constexpr int kTaylorOrder = 48;

// Taylor coefficients of P0(t) = (t + e^{-t} - 1) / (4 sinh²(t/2)) and
// P1(t) = t (1 - e^{-t}) / (4 sinh²(t/2)); both are analytic for |t| < 2π.
struct KernelSeries {
    std::array<double, kTaylorOrder> p0{};
    std::array<double, kTaylorOrder> p1{};

    KernelSeries() {
        std::array<double, kTaylorOrder + 3> inv_fact{};
        inv_fact[0] = 1.0;
        for (std::size_t k = 1; k < inv_fact.size(); ++k) inv_fact[k] = inv_fact[k - 1] / static_cast<double>(k);

        // 4 sinh²(t/2) / t² = Σ_j 2 t^{2j} / (2j+2)!
        std::array<double, kTaylorOrder> s{};
        for (int k = 0; k < kTaylorOrder; k += 2) s[k] = 2.0 * inv_fact[k + 2];
        std::array<double, kTaylorOrder> inv{};
        inv[0] = 1.0 / s[0];
        for (int n = 1; n < kTaylorOrder; ++n) {
            double acc = 0.0;
            for (int j = 1; j <= n; ++j) acc += s[j] * inv[n - j];
            inv[n] = -acc / s[0];
        }
        std::array<double, kTaylorOrder> c0{};
        std::array<double, kTaylorOrder> c1{};
        for (int k = 0; k < kTaylorOrder; ++k) {
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            c0[k] = sign * inv_fact[k + 2];
            c1[k] = sign * inv_fact[k + 1];
        }
        for (int n = 0; n < kTaylorOrder; ++n) {
            for (int j = 0; j <= n; ++j) {
                p0[n] += c0[j] * inv[n - j];
                p1[n] += c1[j] * inv[n - j];
            }
        }
    }
};

const KernelSeries& kernel_series() {
    static const KernelSeries series;
    return series;
}

Complex horner(const std::array<double, kTaylorOrder>& c, Complex t) {
    Complex acc = 0.0;
    for (int k = kTaylorOrder - 1; k >= 0; --k) acc = acc * t + c[k];
    return acc;
}

// e^{-tx} K_x(t) / (4 sinh²(t/2)), the integrand without the t^{z-1} factor.
Complex kernel(Complex t, double x) {
    const Complex damp = std::exp(-t * x);
    if (std::abs(t) < 1.0) {
        const auto& ks = kernel_series();
        return damp * (horner(ks.p0, t) + x * horner(ks.p1, t));
    }
    const Complex em = std::exp(-t);
    const Complex one_minus = 1.0 - em;
    const Complex p0 = (t + em - 1.0) * em / (one_minus * one_minus);
    const Complex p1 = t * em / one_minus;
    return damp * (p0 + x * p1);
}

struct PanelSums {
    Complex value = 0.0;
    double abs_mass = 0.0;  // ∫ |integrand| dr
};

// ∫_{lo}^{hi} r^{z-1} kernel(r e^{iφ}) dr over `count` panels, geometric or uniform in r.
PanelSums integrate_ray(Complex z, double x, Complex direction, double lo, double hi, int count,
                        bool geometric, const quad::GaussRule& rule) {
    PanelSums out;
    const double log_lo = std::log(lo);
    const double log_ratio = std::log(hi / lo);
    for (int p = 0; p < count; ++p) {
        double a = 0.0;
        double b = 0.0;
        if (geometric) {
            a = std::exp(log_lo + log_ratio * p / count);
            b = std::exp(log_lo + log_ratio * (p + 1) / count);
        } else {
            a = lo + (hi - lo) * p / count;
            b = lo + (hi - lo) * (p + 1) / count;
        }
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
            const double r = mid + half * rule.nodes[q];
            const Complex f = std::exp((z - 1.0) * std::log(r)) * kernel(r * direction, x);
            out.value += rule.weights[q] * half * f;
            out.abs_mass += rule.weights[q] * half * std::abs(f);
        }
    }
    return out;
}

}  // namespace

EvalResult psi_integral(Complex z, double x, const QuadratureSpec& spec) {
    require_finite(z, x, "psi_integral");
    spec.validate();
    if (!(z.real() > 0.0)) throw DomainError("psi_integral: requires Re z > 0");
    if (std::abs(z - 1.0) <= kIntegralPoleGuard) throw PoleError("psi_integral: z too close to 1");
    if (!(x > kMinShift)) throw DomainError("psi_integral: requires x > -1");

    const double sigma = z.real();
    const double im = z.imag();

    // Rotating the ray by φ multiplies t^{z-1} by e^{-φ Im z}, cancelling the growth of
    // 1/Γ(z). The remaining gap δ = π/2 - |φ| keeps the ray clear of the poles at ±2πi.
    double phi = 0.0;
    if (im != 0.0) {
        const double delta = std::clamp(2.0 / std::abs(im), 0.05, std::numbers::pi / 2.0);
        phi = std::copysign(std::numbers::pi / 2.0 - delta, im);
    }
    const double cos_phi = std::cos(phi);
    const Complex direction = std::polar(1.0, phi);
    const Complex scale = std::exp(Complex(0.0, phi) * z) / ((z - 1.0) * complex_gamma(z));
    const double scale_abs = std::abs(scale);

    // Near-zero piece: Σ_k g_k ∫_0^{ts} (r e^{iφ})^{z-1+k} e^{iφ} dr with g the Taylor
    // coefficients of kernel(t, x); the e^{iφz} factor lives in `scale`.
    const double ts = std::min(spec.t_split, 0.5 / (1.0 + std::abs(x)));
    const auto& ks = kernel_series();
    std::array<double, kTaylorOrder> g{};
    {
        double exp_coeff = 1.0;  // (-x)^j / j!
        std::array<double, kTaylorOrder> damp{};
        for (int j = 0; j < kTaylorOrder; ++j) {
            damp[j] = exp_coeff;
            exp_coeff *= -x / (j + 1.0);
        }
        for (int n = 0; n < kTaylorOrder; ++n) {
            for (int j = 0; j <= n; ++j) g[n] += damp[j] * (ks.p0[n - j] + x * ks.p1[n - j]);
        }
    }
    Complex near = 0.0;
    double near_err = 0.0;
    const double log_ts = std::log(ts);
    for (int k = 0; k < kTaylorOrder; ++k) {
        const Complex term = g[k] * std::polar(1.0, phi * k) * std::exp((z + double(k)) * log_ts) / (z + double(k));
        near += term;
        near_err = std::abs(term);
    }
    near_err = 2.0 * near_err + 4.0 * kEps * std::abs(near) * (1.0 + std::abs(z) * std::abs(log_ts));

    // Tail bound beyond R: |integrand| <= r^{σ-1} (2 + r(1 + 2|x|)) e^{-r cosφ (1+x)} / (1 - e^{-R cosφ})².
    const double decay = cos_phi * (1.0 + x);
    const auto tail_bound = [&](double big_r) {
        const double rate = decay - sigma / big_r;
        if (rate <= 0.0) return std::numeric_limits<double>::infinity();
        const double guard = 1.0 - std::exp(-big_r * cos_phi);
        return scale_abs * std::pow(big_r, sigma) * std::exp(-decay * big_r) *
               (1.0 + 2.0 * std::abs(x) + 2.0 / big_r) / (guard * guard * rate);
    };
    const double r_cap = std::max(2.0, spec.t_max / (cos_phi * std::min(1.0, 1.0 + x)));
    double r_max = 2.0;
    while (r_max < r_cap && tail_bound(r_max) > 1e-2 * spec.tol) r_max = std::min(r_cap, r_max * 1.05);
    const double tail = tail_bound(r_max);

    EvalFlag flags = pole_flag(z);
    if (tail > 0.1 * spec.tol) flags = flags | EvalFlag::TailTruncated;

    const auto rule = quad::gauss_legendre(spec.panel_order);
    const double phase = std::abs(im) * std::log(r_max) + (1.0 + std::abs(x)) * std::abs(std::sin(phi)) * (r_max - 1.0);
    int n_geo = std::max(8, spec.panels / 4 + static_cast<int>(std::ceil(std::abs(im) * std::log(1.0 / ts) / (2.0 * std::numbers::pi))));
    int n_lin = std::max(std::max(8, 3 * spec.panels / 4), static_cast<int>(std::ceil(phase / 2.0)));

    const auto integrate = [&](int geo, int lin) {
        PanelSums low = integrate_ray(z, x, direction, ts, 1.0, geo, true, rule);
        const PanelSums high = integrate_ray(z, x, direction, 1.0, r_max, lin, false, rule);
        low.value += high.value;
        low.abs_mass += high.abs_mass;
        return low;
    };

    PanelSums coarse = integrate(n_geo, n_lin);
    constexpr int kMaxDoublings = 8;
    for (int level = 0; level < kMaxDoublings; ++level) {
        n_geo *= 2;
        n_lin *= 2;
        const PanelSums fine = integrate(n_geo, n_lin);
        const double delta = std::abs(fine.value - coarse.value);
        const double rounding =
            kEps * fine.abs_mass * (16.0 + std::abs(z - 1.0) * std::max(std::log(r_max), std::abs(log_ts)));
        if (scale_abs * delta <= 0.5 * spec.tol || delta <= 4.0 * rounding) {
            const Complex value = scale * (near + fine.value);
            // Γ(z) from the Lanczos form carries a relative error of a few ulps times |z|.
            const double gamma_err = 2.0 * kEps * (4.0 + std::abs(z)) * std::abs(value);
            const double abs_err = scale_abs * (delta + near_err + rounding) + tail + gamma_err;
            if (abs_err > spec.tol) {
                throw QuadratureFailure("psi_integral: error estimate exceeds tol");
            }
            return {value, abs_err, Method::Integral, flags};
        }
        coarse = fine;
    }
    throw QuadratureFailure("psi_integral: panel refinement did not converge");
}

EvalResult psi_integral(Complex z, double x, double tol) {
    return psi_integral(z, x, QuadratureSpec::defaults_for(z, tol));
}

// ---------------------------------------------------------------------------

EvalResult psi_eval(Complex z, double x, Method method, double tol) {
    switch (method) {
        case Method::Series: return psi_series(z, x, tol);
        case Method::EulerMaclaurin: return psi_euler_maclaurin(z, x);
        case Method::Integral: return psi_integral(z, x, tol);
    }
    throw DomainError("psi_eval: unknown method");
}

ResidualResult functional_equation_residual(Complex z, double x, Method method, double tol) {
    if (!(x > 0.0)) throw DomainError("functional_equation_residual: requires x > 0");
    const EvalResult here = psi_eval(z, x, method, tol);
    const EvalResult shifted = psi_eval(z, x - 1.0, method, tol);
    const Complex power = complex_power(x, z);
    const double residual = std::abs(here.value - shifted.value + power);
    const double power_err = 4.0 * kEps * std::abs(power) * power_rel_err(x, z);
    return {residual, here.abs_err + shifted.abs_err + power_err};
}

ResidualResult boundary_zeta_residual(Complex z, Method method, double tol) {
    const EvalResult psi = psi_eval(z, 0.0, method, tol);
    const Complex zeta = reference_zeta(z);
    return {std::abs(psi.value - zeta), psi.abs_err};
}

Complex pole_probe(double x, double eps) {
    if (!(x >= 0.0)) throw DomainError("pole_probe: requires x >= 0");
    if (!(eps > 1e-7 && eps < 1e-2)) throw DomainError("pole_probe: eps must lie in (1e-7, 1e-2)");
    constexpr std::array<Complex, 4> kDirections = {Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)};
    Complex acc = 0.0;
    for (const Complex d : kDirections) {
        const Complex z = 1.0 + eps * d;
        acc += (z - 1.0) * psi_euler_maclaurin(z, x).value;
    }
    return acc / 4.0;
}

}  // namespace psilab
