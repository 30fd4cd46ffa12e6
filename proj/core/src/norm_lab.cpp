#include "psilab/norm_lab.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "psilab/errors.hpp"
#include "psilab/psi_eval.hpp"
#include "psilab/quadrature.hpp"

namespace psilab {

namespace {

void require_evaluable(Complex z, const char* who) {
    if (!(z.real() > 0.0)) throw DomainError(std::string(who) + ": requires Re z > 0");
    if (std::abs(z - 1.0) <= kIntegralPoleGuard) throw PoleError(std::string(who) + ": z too close to 1");
}

double weighted_density(Complex z, double alpha, double x) {
    return std::norm(psi_euler_maclaurin(z, x).value) * std::pow(x, alpha);
}

// Half-width of a bump in units of its width, where exp(-u²/2) = 1e-16.
const double kBumpCut = std::sqrt(2.0 * std::log(1e16));

}  // namespace

WeightExponent::WeightExponent(double alpha) : alpha_(alpha) {
    if (!std::isfinite(alpha) || std::abs(alpha) > 4.0) throw DomainError("WeightExponent: |alpha| must be <= 4");
}

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::Convergent: return "Convergent";
        case Verdict::Divergent: return "Divergent";
        case Verdict::Marginal: return "Marginal";
    }
    return "unknown";
}

double weighted_norm_integral(Complex z, WeightExponent w, double x_min, double x_max, double tol) {
    require_evaluable(z, "weighted_norm_integral");
    if (!(x_min > 0.0 && x_min < x_max)) throw DomainError("weighted_norm_integral: need 0 < x_min < x_max");
    if (!(tol > 0.0)) throw DomainError("weighted_norm_integral: tol must be positive");
    const double alpha = w.value();
    // x = e^u turns the power-law integrand into a slowly varying one.
    const auto integrand = [&](double u) {
        const double x = std::exp(u);
        return weighted_density(z, alpha, x) * x;
    };
    const auto result = quad::integrate_adaptive(integrand, std::log(x_min), std::log(x_max), tol, 0.0, 4000);
    return result.value;
}

std::vector<double> default_tail_samples() {
    constexpr int kCount = 12;
    std::vector<double> xs(kCount);
    for (int i = 0; i < kCount; ++i) xs[i] = 50.0 * std::pow(100.0, static_cast<double>(i) / (kCount - 1));
    return xs;
}

double tail_exponent_fit(Complex z, WeightExponent w, const std::vector<double>& sample_points) {
    require_evaluable(z, "tail_exponent_fit");
    if (sample_points.size() < 6) throw DomainError("tail_exponent_fit: need at least 6 sample points");
    for (std::size_t i = 0; i < sample_points.size(); ++i) {
        if (!(sample_points[i] >= 20.0)) throw DomainError("tail_exponent_fit: sample points must be >= 20");
        if (i > 0 && !(sample_points[i] > sample_points[i - 1])) {
            throw DomainError("tail_exponent_fit: sample points must increase");
        }
    }
    const double n = static_cast<double>(sample_points.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const double x : sample_points) {
        const double lx = std::log(x);
        const double ly = std::log(weighted_density(z, w.value(), x));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ConvergenceVerdict convergence_classify(Complex z, WeightExponent w) {
    require_evaluable(z, "convergence_classify");
    const double alpha = w.value();
    ConvergenceVerdict out;
    out.fitted_exponent = tail_exponent_fit(z, w, default_tail_samples());
    out.predicted_exponent = 2.0 - 2.0 * z.real() + alpha;
    out.threshold_sigma = (3.0 + alpha) / 2.0;
    if (out.fitted_exponent < -1.0 - kMarginalBand) {
        out.verdict = Verdict::Convergent;
    } else if (out.fitted_exponent > -1.0 + kMarginalBand) {
        out.verdict = Verdict::Divergent;
    } else {
        out.verdict = Verdict::Marginal;
    }
    if (alpha <= -1.0) {
        out.origin_certified = false;
        out.origin_contribution = weighted_norm_integral(z, w, 1e-3, 1.0, 1e-8);
    }
    return out;
}

AAlphaEigen a_alpha_eigendata(Complex z, WeightExponent w) {
    const double critical = (w.value() + 1.0) / 2.0;
    const Complex eigenvalue = Complex(0.0, 1.0) * (critical - z);
    return {eigenvalue, critical, std::abs(z.real() - critical) < 1e-14};
}

std::vector<Bump> dilation_test_family() {
    return {{2.0, 0.2}, {2.5, 0.2}, {3.0, 0.3}, {4.0, 0.4}, {5.0, 0.25}, {5.0, 0.5}};
}

double weighted_dilation_check(double lambda, WeightExponent w, const Grid& grid) {
    if (!(lambda >= 0.1 && lambda <= 10.0)) throw DomainError("weighted_dilation_check: lambda must lie in [0.1, 10]");
    const double alpha = w.value();
    const double h = grid.spacing();
    const double prefactor = std::pow(lambda, -(1.0 + alpha) / 2.0);

    const auto bump = [](const Bump& b, double x) {
        const double u = (x - b.center) / b.width;
        return std::abs(u) > kBumpCut ? 0.0 : std::exp(-0.5 * u * u);
    };
    double worst = 0.0;
    for (const Bump& b : dilation_test_family()) {
        const double scale = std::min(1.0, lambda);
        const double lo = std::min(1.0, lambda) * (b.center - kBumpCut * b.width);
        const double hi = std::max(1.0, lambda) * (b.center + kBumpCut * b.width);
        if (lo < grid.offset() || hi > grid.extent()) {
            throw QuadratureFailure("weighted_dilation_check: grid does not cover the dilated bump");
        }
        if (scale * b.width / h < 2.0) {
            throw QuadratureFailure("weighted_dilation_check: grid does not resolve the dilated bump");
        }
        double plain = 0.0;
        double dilated = 0.0;
        for (std::size_t i = 0; i < grid.count(); ++i) {
            const double x = grid.node(i);
            const double weight = std::pow(x, alpha);
            const double f = bump(b, x);
            const double g = prefactor * bump(b, x / lambda);
            plain += f * f * weight;
            dilated += g * g * weight;
        }
        const double norm_plain = std::sqrt(plain * h);
        const double norm_dilated = std::sqrt(dilated * h);
        worst = std::max(worst, std::abs(norm_dilated - norm_plain) / norm_plain);
    }
    return worst;
}

}  // namespace psilab
