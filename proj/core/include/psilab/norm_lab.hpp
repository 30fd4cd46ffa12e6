#pragma once

// Weighted L² norms of ψ_z on the half-line.
//
// ‖f‖_α² = ∫_0^∞ |f(x)|² x^α dx. For large x, ψ_z(x) ~ x^{1-z}/(z-1), so
// |ψ_z|² x^α decays like x^{2-2Re z+α} and the norm is finite at infinity only
// for Re z > (3+α)/2. The functions here measure that exponent numerically,
// classify convergence, and check the weighted dilation representation.

#include <string_view>
#include <vector>

#include "psilab/grid.hpp"
#include "psilab/special_fn.hpp"

namespace psilab {

/// Exponent α of the weight x^α, restricted to [-4, 4].
class WeightExponent {
public:
    explicit WeightExponent(double alpha);
    double value() const { return alpha_; }

private:
    double alpha_;
};

enum class Verdict { Convergent, Divergent, Marginal };

std::string_view to_string(Verdict verdict);

struct ConvergenceVerdict {
    Verdict verdict = Verdict::Marginal;
    double fitted_exponent = 0.0;
    double predicted_exponent = 0.0;  ///< 2 - 2 Re z + α
    double threshold_sigma = 0.0;     ///< (3 + α) / 2
    /// For α > -1 the origin is integrable because ψ_z is bounded on [0, 1].
    /// Otherwise the origin is not certified and `origin_contribution` holds ∫_{1e-3}^{1}.
    bool origin_certified = true;
    double origin_contribution = 0.0;
};

/// Band half-width around -1 for the Marginal verdict.
inline constexpr double kMarginalBand = 0.1;

/// ∫_{x_min}^{x_max} |ψ_z(x)|² x^α dx by adaptive Gauss–Kronrod in log x.
double weighted_norm_integral(Complex z, WeightExponent w, double x_min, double x_max, double tol = 1e-10);

/// Twelve log-spaced abscissae on [50, 5000].
std::vector<double> default_tail_samples();

/// Least-squares slope of log(|ψ_z(x)|² x^α) against log x.
double tail_exponent_fit(Complex z, WeightExponent w, const std::vector<double>& sample_points);

ConvergenceVerdict convergence_classify(Complex z, WeightExponent w);

struct AAlphaEigen {
    Complex eigenvalue;     ///< i((α+1)/2 - z)
    double critical_sigma;  ///< (α+1)/2
    bool is_real;           ///< |Re z - critical_sigma| < 1e-14
};

/// Eigenvalue of x^{-z} under A_α = i x d/dx + i(α+1)/2.
AAlphaEigen a_alpha_eigendata(Complex z, WeightExponent w);

/// Gaussian bump exp(-(x-c)²/(2w²)), cut to zero below 1e-16 relative amplitude.
struct Bump {
    double center;
    double width;
};

/// Members of the dilation test family; each has its support inside (0, ∞).
std::vector<Bump> dilation_test_family();

/// max over the test family of |‖D(λ)f‖_α - ‖f‖_α| / ‖f‖_α, with
/// D(λ)f(x) = λ^{-(1+α)/2} f(x/λ) and norms as trapezoid sums on `grid`.
///
/// λ must lie in [0.1, 10]. Throws QuadratureFailure if the grid does not cover or resolve the dilated bumps.
double weighted_dilation_check(double lambda, WeightExponent w, const Grid& grid);

}  // namespace psilab
