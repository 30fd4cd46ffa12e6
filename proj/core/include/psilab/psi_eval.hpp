#pragma once

// Evaluators for ψ_z(x) = Σ_{n>=1} (n + x)^{-z} and its continuation to Re z > 0.
//
// Three independent routes are provided:
//   - direct summation of the defining series (Re z > 1),
//   - Euler–Maclaurin summation with Bernoulli corrections (Re z > 0),
//   - quadrature of the Mellin-type integral representation (Re z > 0).
// Each returns an EvalResult carrying an error estimate so that routes can be
// compared against one another.

#include <cstdint>
#include <string_view>

#include "psilab/special_fn.hpp"

namespace psilab {

enum class Method { Series, EulerMaclaurin, Integral };

std::string_view to_string(Method method);

enum class EvalFlag : std::uint8_t {
    None = 0,
    NearPole = 1u << 0,
    TailTruncated = 1u << 1,
};

constexpr EvalFlag operator|(EvalFlag a, EvalFlag b) {
    return static_cast<EvalFlag>(static_cast<std::uint8_t>(a) | static_cast<std::uint8_t>(b));
}
constexpr bool has_flag(EvalFlag set, EvalFlag flag) {
    return (static_cast<std::uint8_t>(set) & static_cast<std::uint8_t>(flag)) != 0;
}

struct EvalResult {
    Complex value;
    double abs_err = 0.0;  ///< estimate, not a rigorous enclosure
    Method method = Method::Series;
    EvalFlag flags = EvalFlag::None;
};

/// Controls for the integral route.
struct QuadratureSpec {
    double t_split = 1e-2;  ///< below this, the integrand is integrated term by term from its Taylor series
    int panel_order = 16;   ///< Gauss–Legendre points per panel
    int panels = 32;        ///< initial panel count (doubled until converged)
    double t_max = 60.0;    ///< decay length of the truncated tail, in units of Re t
    double tol = 1e-12;

    /// Defaults scaled to the oscillation of t^{z-1}: panels = max(32, 8|Im z|), t_max = 60 + 5|Im z|.
    static QuadratureSpec defaults_for(Complex z, double tol = 1e-12);

    /// Throws DomainError when a field violates its range.
    void validate() const;
};

inline constexpr double kNearPoleRadius = 1e-6;
inline constexpr double kSummationPoleGuard = 1e-8;
inline constexpr double kIntegralPoleGuard = 1e-6;
inline constexpr long long kSeriesTermCap = 100'000'000;

/// Direct summation with a midpoint-rule tail: value = Σ_{n<=N} (n+x)^{-z} + (N+1/2+x)^{1-z}/(z-1).
///
/// The tail correction has error at most |z(z+1)| (N-1/2+x)^{-σ-1} / (24(σ+1)), which sets
/// N; abs_err adds a rounding estimate. Needs Re z > 1 and x > -1.
EvalResult psi_series(Complex z, double x, double tol);

/// Euler–Maclaurin summation with `n_direct` explicit terms and `n_bernoulli` correction terms.
EvalResult psi_euler_maclaurin(Complex z, double x, int n_direct, int n_bernoulli);

/// Euler–Maclaurin with the direct-term count chosen so that the first omitted correction
/// is below double precision; the fastest valid route on Re z > 0.
EvalResult psi_euler_maclaurin(Complex z, double x);

/// Quadrature of ψ_z(x) = 1/((z-1)Γ(z)) ∫_0^∞ t^{z-1} e^{-tx} K_x(t) / (4 sinh²(t/2)) dt
/// with K_x(t) = t + e^{-t} - 1 + x t (1 - e^{-t}).
///
/// For Im z != 0 the ray of integration is rotated towards the imaginary axis, which
/// removes the e^{π|Im z|/2} cancellation between 1/Γ(z) and the integral. Accepts
/// x > -1 (the integrand still decays like e^{-(1+x)Re t}).
EvalResult psi_integral(Complex z, double x, const QuadratureSpec& spec);
EvalResult psi_integral(Complex z, double x, double tol = 1e-12);

/// Dispatch by method. Series and Integral use `tol`; Euler–Maclaurin uses the automatic term count.
EvalResult psi_eval(Complex z, double x, Method method, double tol = 1e-12);

/// |ψ_z(x) - ψ_z(x-1) + x^{-z}|, both ψ values from `method`.
struct ResidualResult {
    double residual = 0.0;
    double combined_err = 0.0;  ///< sum of the evaluators' abs_err
};
ResidualResult functional_equation_residual(Complex z, double x, Method method, double tol = 1e-12);

/// |ψ_z(0) - reference_zeta(z)|.
ResidualResult boundary_zeta_residual(Complex z, Method method, double tol = 1e-12);

/// Mean of (z-1)ψ_z(x) over z = 1 + eps·{1, i, -1, -i}; estimates the residue at z = 1.
Complex pole_probe(double x, double eps);

}  // namespace psilab
