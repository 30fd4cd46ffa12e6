#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "psilab/errors.hpp"
#include "psilab/grid.hpp"
#include "psilab/norm_lab.hpp"
#include "psilab/operator_lab.hpp"
#include "psilab/psi_eval.hpp"

namespace psilab::cli {

namespace {

constexpr double kAgreementSlack = 1e-12;

Method method_from(const std::string& name) {
    if (name == "series") return Method::Series;
    if (name == "em") return Method::EulerMaclaurin;
    if (name == "integral") return Method::Integral;
    throw UsageError("unknown method '" + name + "' (expected series, em or integral)");
}

std::string join(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + format_real(values[i]);
    return out;
}

std::string join(const std::vector<Complex>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + format_complex(values[i]);
    return out;
}

std::string flags_text(EvalFlag flags) {
    std::string out;
    if (has_flag(flags, EvalFlag::NearPole)) out += "near-pole";
    if (has_flag(flags, EvalFlag::TailTruncated)) out += out.empty() ? "tail-truncated" : "|tail-truncated";
    return out.empty() ? "none" : out;
}

// Rows of the operators and suite reports share one layout.
const std::vector<std::string> kMeasureColumns = {"claim", "quantity", "h", "value", "threshold", "pass"};

Row measure(std::string claim, std::string quantity, Cell h, Cell value, Cell threshold, bool pass) {
    Row row;
    row.claim = std::move(claim);
    row.set("quantity", std::move(quantity)).set("h", std::move(h)).set("value", std::move(value));
    row.set("threshold", std::move(threshold));
    row.pass = pass;
    return row;
}

bool ratio_ok(double ratio) {
    return ratio >= 3.5 && ratio <= 4.5;
}

const std::string kRatioBand = "3.5..4.5";

// Residual sequences on h, h/2, h/4 for both eigenvalue signs.
struct SignedLevels {
    double h[3];
    double positive[3];
    double negative[3];
};

SignedLevels dilation_levels(Complex z, double h, double length, double offset) {
    SignedLevels out{};
    for (int k = 0; k < 3; ++k) {
        const double hk = h / std::pow(2.0, k);
        // Offset 1 - 3h pins the first interior node at x = 1 on every level.
        const Grid grid = Grid::covering(hk, length, offset > 0.0 ? offset : 1.0 - 3.0 * hk);
        out.h[k] = hk;
        out.positive[k] = dilation_generator_residual(z, grid, EigenSign::PositiveI).residual;
        out.negative[k] = dilation_generator_residual(z, grid, EigenSign::NegativeI).residual;
    }
    return out;
}

SignedLevels intertwine_levels(Complex z, double h, double length, double offset) {
    SignedLevels out{};
    for (int k = 0; k < 3; ++k) {
        const double hk = h / std::pow(2.0, k);
        const Grid grid = offset > 0.0 ? Grid::covering(hk, length, offset) : Grid::covering(hk, length);
        const IntertwineResult r = intertwine_check(z, grid);
        out.h[k] = hk;
        const bool positive_best = r.sign == EigenSign::PositiveI;
        out.positive[k] = positive_best ? r.best.residual : r.other_residual;
        out.negative[k] = positive_best ? r.other_residual : r.best.residual;
    }
    return out;
}

// The consistent sign is the one whose finest residual is smaller; ties (z = 1/2) pick +i.
EigenSign consistent_sign(const SignedLevels& levels) {
    return levels.negative[2] < levels.positive[2] ? EigenSign::NegativeI : EigenSign::PositiveI;
}

const double* residuals_for(const SignedLevels& levels, EigenSign sign) {
    return sign == EigenSign::PositiveI ? levels.positive : levels.negative;
}

void add_levels(RunReport& report, const std::string& claim, const SignedLevels& levels) {
    for (int k = 0; k < 3; ++k) {
        report.add(measure(claim, "residual-positive-i", levels.h[k], levels.positive[k], "", true));
        report.add(measure(claim, "residual-negative-i", levels.h[k], levels.negative[k], "", true));
    }
    const EigenSign sign = consistent_sign(levels);
    const double* r = residuals_for(levels, sign);
    report.add(measure(claim, "consistent-sign", "", std::string(to_string(sign)), "", true));
    for (int k = 0; k < 2; ++k) {
        const double ratio = r[k] / r[k + 1];
        report.add(measure(claim, "halving-ratio", levels.h[k + 1], ratio, kRatioBand, ratio_ok(ratio)));
    }
}

}  // namespace

RunReport cmd_eval(const EvalOptions& opt) {
    RunReport report;
    report.command = "eval";
    report.parameters = {{"z", format_complex(opt.z)}, {"x", format_real(opt.x)}, {"method", opt.method},
                         {"tol", format_real(opt.tol)}};
    report.columns = {"claim", "method", "value_re", "value_im", "abs_err", "bound", "flags", "pass"};
    report.tolerance_used = opt.tol;

    std::vector<Method> methods;
    if (opt.method == "all") {
        if (opt.z.real() > 1.0) methods.push_back(Method::Series);
        methods.push_back(Method::EulerMaclaurin);
        methods.push_back(Method::Integral);
    } else {
        methods.push_back(method_from(opt.method));
    }

    std::vector<EvalResult> results;
    for (const Method m : methods) {
        results.push_back(psi_eval(opt.z, opt.x, m, opt.tol));
        const EvalResult& r = results.back();
        Row row;
        row.claim = "psi-value";
        row.set("method", std::string(to_string(m))).set("value_re", r.value.real()).set("value_im", r.value.imag());
        row.set("abs_err", r.abs_err).set("bound", "").set("flags", flags_text(r.flags));
        report.add(std::move(row));
    }
    for (std::size_t a = 0; a < results.size(); ++a) {
        for (std::size_t b = a + 1; b < results.size(); ++b) {
            const Complex delta = results[a].value - results[b].value;
            const double bound = results[a].abs_err + results[b].abs_err + kAgreementSlack;
            Row row;
            row.claim = "cross-method-agreement";
            row.set("method", std::string(to_string(results[a].method)) + "-" + std::string(to_string(results[b].method)));
            row.set("value_re", delta.real()).set("value_im", delta.imag()).set("abs_err", std::abs(delta));
            row.set("bound", bound).set("flags", "none");
            row.pass = std::abs(delta) <= bound;
            report.add(std::move(row));
        }
    }
    return report;
}

RunReport cmd_feq(const FeqOptions& opt) {
    const Method method = method_from(opt.method);
    if (opt.z.empty() || opt.x.empty()) throw UsageError("feq needs --z and --x");
    for (const double x : opt.x) {
        if (!(x > 0.0)) throw UsageError("feq: every x must be > 0 (got " + format_real(x) + ")");
    }
    RunReport report;
    report.command = "feq";
    report.parameters = {{"z", join(opt.z)}, {"x", join(opt.x)}, {"method", opt.method}, {"tol", format_real(opt.tol)}};
    report.columns = {"claim", "z_re", "z_im", "x", "residual", "combined_err", "bound", "pass"};
    report.tolerance_used = opt.tol;
    for (const Complex z : opt.z) {
        for (const double x : opt.x) {
            const ResidualResult r = functional_equation_residual(z, x, method, opt.tol);
            const double bound = r.combined_err + kAgreementSlack;
            Row row;
            row.claim = "functional-equation";
            row.set("z_re", z.real()).set("z_im", z.imag()).set("x", x).set("residual", r.residual);
            row.set("combined_err", r.combined_err).set("bound", bound);
            row.pass = r.residual <= bound;
            report.add(std::move(row));
        }
    }
    return report;
}

RunReport cmd_boundary(const BoundaryOptions& opt) {
    if (opt.z.empty()) throw UsageError("boundary needs --z");
    if (opt.method != "auto") method_from(opt.method);
    RunReport report;
    report.command = "boundary";
    report.parameters = {{"z", join(opt.z)},
                         {"method", opt.method},
                         {"tol", format_real(opt.tol)},
                         {"threshold", format_real(opt.threshold)}};
    report.columns = {"claim", "z_re", "z_im", "method", "residual", "combined_err", "threshold", "pass"};
    report.tolerance_used = opt.threshold;
    for (const Complex z : opt.z) {
        const Method m = opt.method == "auto" ? (z.real() > 1.0 ? Method::Series : Method::EulerMaclaurin)
                                              : method_from(opt.method);
        const ResidualResult r = boundary_zeta_residual(z, m, opt.tol);
        Row row;
        row.claim = "boundary-zeta";
        row.set("z_re", z.real()).set("z_im", z.imag()).set("method", std::string(to_string(m)));
        row.set("residual", r.residual).set("combined_err", r.combined_err).set("threshold", opt.threshold);
        row.pass = r.residual <= opt.threshold;
        report.add(std::move(row));
    }
    return report;
}

RunReport cmd_pole(const PoleOptions& opt) {
    if (opt.x.empty()) throw UsageError("pole needs --x");
    RunReport report;
    report.command = "pole";
    report.parameters = {{"x", join(opt.x)}, {"eps", format_real(opt.eps)}};
    report.columns = {"claim", "x", "eps", "residue_re", "residue_im", "deviation", "threshold", "pass"};
    const double threshold = 10.0 * opt.eps;
    report.tolerance_used = threshold;
    for (const double x : opt.x) {
        const Complex r = pole_probe(x, opt.eps);
        Row row;
        row.claim = "pole-residue";
        row.set("x", x).set("eps", opt.eps).set("residue_re", r.real()).set("residue_im", r.imag());
        row.set("deviation", std::abs(r - 1.0)).set("threshold", threshold);
        row.pass = std::abs(r - 1.0) <= threshold;
        report.add(std::move(row));
    }
    return report;
}

RunReport cmd_norm_scan(const NormScanOptions& opt) {
    if (opt.sigma.empty() || opt.t.empty() || opt.alpha.empty()) throw UsageError("norm-scan needs --sigma, --t, --alpha");
    RunReport report;
    report.command = "norm-scan";
    report.parameters = {{"sigma", join(opt.sigma)}, {"t", join(opt.t)}, {"alpha", join(opt.alpha)}};
    report.columns = {"sigma", "t", "alpha", "fitted_exponent", "predicted_exponent", "verdict", "threshold_sigma"};
    report.tolerance_used = kMarginalBand;
    for (const double sigma : opt.sigma) {
        for (const double t : opt.t) {
            for (const double alpha : opt.alpha) {
                const ConvergenceVerdict v = convergence_classify(Complex(sigma, t), WeightExponent(alpha));
                const double margin = sigma - v.threshold_sigma;
                bool ok = true;
                if (margin > kMarginalBand) ok = v.verdict == Verdict::Convergent;
                if (margin < -kMarginalBand) ok = v.verdict == Verdict::Divergent;
                if (v.verdict == Verdict::Marginal) ok = ok && std::abs(v.fitted_exponent + 1.0) <= kMarginalBand;
                Row row;
                row.claim = "norm-threshold";
                row.set("sigma", sigma).set("t", t).set("alpha", alpha).set("fitted_exponent", v.fitted_exponent);
                row.set("predicted_exponent", v.predicted_exponent).set("verdict", std::string(to_string(v.verdict)));
                row.set("threshold_sigma", v.threshold_sigma);
                row.set("origin_certified", v.origin_certified).set("origin_contribution", v.origin_contribution);
                row.pass = ok;
                report.add(std::move(row));
            }
        }
    }
    return report;
}

RunReport cmd_operators(const OperatorOptions& opt) {
    RunReport report;
    report.command = "operators";
    report.parameters = {{"experiment", opt.experiment}, {"h", format_real(opt.h)},   {"L", format_real(opt.length)},
                         {"offset", format_real(opt.offset)}, {"z", format_complex(opt.z)}, {"trials", std::to_string(opt.trials)},
                         {"x_max", format_real(opt.x_max)}};
    report.columns = kMeasureColumns;
    const auto grid_at = [&](double h) {
        return opt.offset > 0.0 ? Grid::covering(h, opt.length, opt.offset) : Grid::covering(h, opt.length);
    };

    if (opt.experiment == "momentum") {
        const std::string claim = "momentum-adjoint-spectrum";
        if (opt.z.real() > 0.0) {
            const SpectralResidual coarse = exp_eigen_residual(opt.z, grid_at(opt.h));
            const SpectralResidual fine = exp_eigen_residual(opt.z, grid_at(opt.h / 2.0));
            report.add(measure(claim, "eigenvalue", "", format_complex(coarse.eigenvalue), "", true));
            report.add(measure(claim, "eigen-residual", opt.h, coarse.residual, "", true));
            report.add(measure(claim, "eigen-residual", opt.h / 2.0, fine.residual, "", true));
            const double ratio = coarse.residual / fine.residual;
            report.add(measure(claim, "halving-ratio", opt.h / 2.0, ratio, kRatioBand, ratio_ok(ratio)));
        } else {
            const Grid grid = grid_at(opt.h);
            const double ratio = exp_growth_ratio(opt.z, grid);
            const double floor = std::exp(std::abs(opt.z.real()) * grid.extent() / 4.0);
            report.add(measure(claim, "growth-ratio", opt.h, ratio, floor, ratio > floor));
        }
        const double defect = interior_hermitian_defect(build_momentum_dirichlet(grid_at(opt.h)));
        report.add(measure("momentum-interior-symmetry", "hermitian-defect", opt.h, defect, 1e-14, defect <= 1e-14));
        report.tolerance_used = 1e-14;
    } else if (opt.experiment == "defect") {
        const std::string claim = "defect-indices";
        const DeficiencyResult plus = deficiency_diagnostic(DeficiencySign::Plus, opt.x_max);
        const DeficiencyResult minus = deficiency_diagnostic(DeficiencySign::Minus, opt.x_max);
        const double change = std::abs(plus.doubled_norm - plus.norm_estimate) / plus.norm_estimate;
        const double growth = minus.doubled_norm / minus.norm_estimate;
        report.add(measure(claim, "plus-norm", "", plus.norm_estimate, 0.5, std::abs(plus.norm_estimate - 0.5) <= 1e-12));
        report.add(measure(claim, "plus-doubling-change", "", change, 1e-12, change < 1e-12));
        report.add(measure(claim, "plus-classification", "", std::string(to_string(plus.classification)),
                           "SquareIntegrable", plus.classification == Integrability::SquareIntegrable));
        report.add(measure(claim, "minus-norm", "", minus.norm_estimate, "", true));
        report.add(measure(claim, "minus-doubling-growth", "", growth, std::exp(opt.x_max), growth >= std::exp(opt.x_max)));
        report.add(measure(claim, "minus-classification", "", std::string(to_string(minus.classification)), "Divergent",
                           minus.classification == Integrability::Divergent));
        report.tolerance_used = 1e-12;
    } else if (opt.experiment == "shift") {
        const Grid grid = grid_at(opt.h);
        const ShiftIsometry iso = shift_isometry_check(grid, opt.trials);
        report.add(measure("shift-partial-isometry", "r1", opt.h, iso.r1, 1e-12, iso.r1 <= 1e-12));
        report.add(measure("shift-partial-isometry", "r2", opt.h, iso.r2, 1e-12, iso.r2 <= 1e-12));
        const SpectralResidual s = shift_adjoint_eigen_residual(opt.z, grid);
        report.add(measure("shift-adjoint-spectrum", "eigenvalue", "", format_complex(s.eigenvalue), "", true));
        report.add(measure("shift-adjoint-spectrum", "eigen-residual", opt.h, s.residual, 1e-9, s.residual <= 1e-9));
        report.add(measure("shift-adjoint-spectrum", "eigenvalue-modulus", "", std::abs(s.eigenvalue), 1.0,
                           std::abs(s.eigenvalue) < 1.0));
        report.tolerance_used = 1e-12;
    } else if (opt.experiment == "dilation") {
        add_levels(report, "dilation-eigenrelation", dilation_levels(opt.z, opt.h, opt.length, opt.offset));
    } else if (opt.experiment == "intertwine") {
        add_levels(report, "intertwining-eigenrelation", intertwine_levels(opt.z, opt.h, opt.length, opt.offset));
    } else {
        throw UsageError("unknown experiment '" + opt.experiment +
                         "' (expected momentum, defect, shift, dilation or intertwine)");
    }
    return report;
}

namespace {

struct Profile {
    double tol;
    double dilation_spacing;
    double eigen_h;
};

Row criterion_row(int number, std::string claim, long long cases, Cell worst, Cell threshold, bool pass) {
    Row row;
    row.claim = std::move(claim);
    row.set("criterion", static_cast<long long>(number)).set("cases", cases).set("worst", std::move(worst));
    row.set("threshold", std::move(threshold));
    row.pass = pass;
    return row;
}

void run_criteria(RunReport& report, const Profile& p) {
    // 1. Cross-method agreement on Re z > 1.
    {
        std::mt19937_64 rng(20240917);
        std::uniform_real_distribution<double> re(1.1, 5.0), im(-20.0, 20.0), xs(0.0, 10.0);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const Complex z(re(rng), im(rng));
            const double x = xs(rng);
            const EvalResult r[3] = {psi_series(z, x, p.tol), psi_euler_maclaurin(z, x), psi_integral(z, x, p.tol)};
            for (int a = 0; a < 3; ++a) {
                for (int b = a + 1; b < 3; ++b) {
                    const double bound = r[a].abs_err + r[b].abs_err + kAgreementSlack;
                    worst = std::max(worst, std::abs(r[a].value - r[b].value) / bound);
                }
            }
        }
        report.add(criterion_row(1, "cross-method-agreement", 100, worst, 1.0, worst <= 1.0));
    }
    // 2. Boundary identity ψ_z(0) = ζ(z).
    {
        const Complex zs[] = {2.0, 3.0, 0.5, 0.75, Complex(0.5, 14.134725), Complex(1.5, 30.0)};
        double worst = 0.0;
        for (const Complex z : zs) {
            for (const Method m : {Method::EulerMaclaurin, Method::Integral}) {
                worst = std::max(worst, boundary_zeta_residual(z, m, p.tol).residual);
            }
            if (z.real() > 1.0) worst = std::max(worst, boundary_zeta_residual(z, Method::Series, p.tol).residual);
        }
        report.add(criterion_row(2, "boundary-zeta", 6, worst, 1e-9, worst <= 1e-9));
    }
    // 3. Functional equation on a 6x6 grid.
    {
        double worst = 0.0;
        for (int i = 0; i < 6; ++i) {
            const Complex z(0.3 + (4.0 - 0.3) * i / 5.0, 1.5);
            for (int j = 0; j < 6; ++j) {
                const double x = 0.5 + (10.0 - 0.5) * j / 5.0;
                for (const Method m : {Method::EulerMaclaurin, Method::Integral}) {
                    const ResidualResult r = functional_equation_residual(z, x, m, p.tol);
                    worst = std::max(worst, r.residual / (r.combined_err + kAgreementSlack));
                }
            }
        }
        report.add(criterion_row(3, "functional-equation", 36, worst, 1.0, worst <= 1.0));
    }
    // 4. Residue at the pole z = 1.
    {
        double worst = 0.0;
        for (const double x : {0.0, 1.0, 5.0}) worst = std::max(worst, std::abs(pole_probe(x, 1e-3) - 1.0));
        report.add(criterion_row(4, "pole-residue", 3, worst, 1e-2, worst <= 1e-2));
    }
    // 5. Tail exponents and the convergence threshold.
    {
        double worst = 0.0;
        bool consistent = true;
        long long cases = 0;
        for (const double sigma : {0.3, 0.5, 0.75, 1.25, 1.75, 2.5}) {
            for (const double alpha : {-2.0, -1.0, 0.0, 1.0}) {
                for (const double t : {0.0, 5.0, 14.13}) {
                    const ConvergenceVerdict v = convergence_classify(Complex(sigma, t), WeightExponent(alpha));
                    worst = std::max(worst, std::abs(v.fitted_exponent - v.predicted_exponent));
                    const double margin = sigma - v.threshold_sigma;
                    if (margin > kMarginalBand && v.verdict != Verdict::Convergent) consistent = false;
                    if (margin < -kMarginalBand && v.verdict != Verdict::Divergent) consistent = false;
                    ++cases;
                }
            }
        }
        const bool critical_divergent =
            convergence_classify(Complex(0.5, 14.13), WeightExponent(0.0)).verdict == Verdict::Divergent;
        report.add(criterion_row(5, "norm-threshold", cases, worst, 0.05, worst <= 0.05 && consistent && critical_divergent));
    }
    // 6. Weighted dilation unitarity.
    {
        const Grid grid = Grid::covering(p.dilation_spacing, 60.0);
        double worst = 0.0;
        for (const double lambda : {0.3, 1.0, 2.0, 5.0}) {
            for (const double alpha : {-2.0, 0.0, 1.5}) {
                worst = std::max(worst, weighted_dilation_check(lambda, WeightExponent(alpha), grid));
            }
        }
        report.add(criterion_row(6, "weighted-dilation-unitarity", 12, worst, 1e-6, worst <= 1e-6));
    }
    // 7. A_alpha eigenvalue realness moves with alpha.
    {
        long long mismatches = 0;
        long long cases = 0;
        for (const double alpha : {-2.0, -1.0, 0.0, 1.5}) {
            const double critical = (alpha + 1.0) / 2.0;
            for (const double t : {0.0, 10.0, 14.134725}) {
                for (const double shift : {0.0, 1e-6, -0.5}) {
                    const AAlphaEigen e = a_alpha_eigendata(Complex(critical + shift, t), WeightExponent(alpha));
                    const bool is_real = std::abs(e.eigenvalue.imag()) < 1e-14;
                    if (e.is_real != (shift == 0.0) || is_real != e.is_real) ++mismatches;
                    ++cases;
                }
            }
        }
        const bool lines = a_alpha_eigendata(0.5, WeightExponent(0.0)).critical_sigma == 0.5 &&
                           a_alpha_eigendata(0.5, WeightExponent(-2.0)).critical_sigma == -0.5 &&
                           !a_alpha_eigendata(Complex(0.5, 10.0), WeightExponent(-2.0)).is_real;
        report.add(criterion_row(7, "a-alpha-critical-line", cases, mismatches, 0LL, mismatches == 0 && lines));
    }
    // 8. Deficiency indices.
    {
        const DeficiencyResult plus = deficiency_diagnostic(DeficiencySign::Plus, 20.0);
        const DeficiencyResult minus = deficiency_diagnostic(DeficiencySign::Minus, 20.0);
        const double deviation = std::abs(plus.norm_estimate - 0.5);
        const bool ok = deviation <= 1e-12 && plus.classification == Integrability::SquareIntegrable &&
                        minus.doubled_norm / minus.norm_estimate >= std::exp(20.0) &&
                        minus.classification == Integrability::Divergent;
        report.add(criterion_row(8, "defect-indices", 2, deviation, 1e-12, ok));
    }
    // 9. Shift algebra and the point spectrum of S*.
    {
        const Grid grid = Grid::covering(0.01, 40.0);
        const ShiftIsometry iso = shift_isometry_check(grid, 10);
        const double worst_iso = std::max(iso.r1, iso.r2);
        report.add(criterion_row(9, "shift-partial-isometry", 10, worst_iso, 1e-12, worst_iso <= 1e-12));
        double worst = 0.0;
        for (const Complex z : {Complex(0.5), Complex(1.0), Complex(2.0), Complex(1.0, 3.0)}) {
            worst = std::max(worst, shift_adjoint_eigen_residual(z, grid).residual);
        }
        report.add(criterion_row(9, "shift-adjoint-spectrum", 4, worst, 1e-9, worst <= 1e-9));
    }
    // 10. Dilation and intertwining eigenrelations under one sign.
    {
        double dil_far = 0.0;
        double itw_far = 0.0;
        bool ok_dil = true;
        bool ok_itw = true;
        for (const Complex z : {Complex(0.5), Complex(2.0), Complex(0.75, 5.0)}) {
            const SignedLevels dil = dilation_levels(z, p.eigen_h, 20.0, -1.0);
            const SignedLevels itw = intertwine_levels(z, p.eigen_h, 20.0, -1.0);
            const double* rd = residuals_for(dil, EigenSign::PositiveI);
            const double* ri = residuals_for(itw, EigenSign::PositiveI);
            for (int k = 0; k < 2; ++k) {
                const double a = rd[k] / rd[k + 1];
                const double b = ri[k] / ri[k + 1];
                dil_far = std::max(dil_far, std::abs(a - 4.0));
                itw_far = std::max(itw_far, std::abs(b - 4.0));
                ok_dil = ok_dil && ratio_ok(a);
                ok_itw = ok_itw && ratio_ok(b);
            }
            if (z != Complex(0.5)) {
                ok_dil = ok_dil && consistent_sign(dil) == EigenSign::PositiveI;
                ok_itw = ok_itw && consistent_sign(itw) == EigenSign::PositiveI;
            } else {
                ok_dil = ok_dil && dilation_eigenvalue(z, EigenSign::PositiveI) == Complex(0.0);
            }
        }
        report.add(criterion_row(10, "dilation-eigenrelation", 3, dil_far, 0.5, ok_dil));
        report.add(criterion_row(10, "intertwining-eigenrelation", 3, itw_far, 0.5, ok_itw));
    }
}

}  // namespace

RunReport cmd_suite(const SuiteOptions& opt) {
    Profile profile{};
    if (opt.profile == "fast") {
        profile = {1e-11, 0.01, 0.02};
    } else if (opt.profile == "strict") {
        profile = {1e-12, 0.005, 0.01};
    } else {
        throw UsageError("unknown profile '" + opt.profile + "' (expected fast or strict)");
    }
    RunReport report;
    report.command = "suite";
    report.parameters = {{"profile", opt.profile}};
    report.columns = {"criterion", "claim", "cases", "worst", "threshold", "pass"};
    report.tolerance_used = profile.tol;
    run_criteria(report, profile);

    // 11. A second pass must render to the same bytes.
    RunReport again = report;
    again.rows.clear();
    run_criteria(again, profile);
    const bool same = to_csv(again) == to_csv(report);
    report.add(criterion_row(11, "determinism", 2, same ? 0LL : 1LL, 0LL, same));
    return report;
}

}  // namespace psilab::cli
