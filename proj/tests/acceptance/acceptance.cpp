// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: acceptance <path-to-psilab-binary>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "psilab/grid.hpp"
#include "psilab/norm_lab.hpp"
#include "psilab/operator_lab.hpp"
#include "psilab/psi_eval.hpp"

using namespace psilab;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* pattern, double a, double b) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

Outcome cross_method() {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> re(1.1, 5.0), im(-20.0, 20.0), xs(0.0, 10.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const Complex z(re(rng), im(rng));
        const double x = xs(rng);
        const EvalResult r[3] = {psi_series(z, x, 1e-12), psi_euler_maclaurin(z, x), psi_integral(z, x, 1e-12)};
        for (int a = 0; a < 3; ++a) {
            for (int b = a + 1; b < 3; ++b) {
                const double excess = std::abs(r[a].value - r[b].value) / (r[a].abs_err + r[b].abs_err + 1e-12);
                worst = std::max(worst, excess);
            }
        }
    }
    return {worst <= 1.0, fmt("max |delta| / (err_a + err_b + 1e-12) = %.3g over 100 points", worst, 0)};
}

Outcome boundary() {
    const Complex zs[] = {2.0, 3.0, 0.5, 0.75, Complex(0.5, 14.134725), Complex(1.5, 30.0)};
    double worst = 0.0;
    for (const Complex z : zs) {
        const Method methods[2] = {z.real() > 1.0 ? Method::Series : Method::EulerMaclaurin, Method::Integral};
        for (const Method m : methods) worst = std::max(worst, boundary_zeta_residual(z, m).residual);
    }
    return {worst <= 1e-9, fmt("max |psi_z(0) - zeta(z)| = %.3g (limit %.0e)", worst, 1e-9)};
}

Outcome functional_equation() {
    double worst = 0.0;
    for (int i = 0; i < 6; ++i) {
        const double sigma = 0.3 + 3.7 * i / 5.0;
        for (int j = 0; j < 6; ++j) {
            const double x = 0.5 + 9.5 * j / 5.0;
            for (const Method m : {Method::EulerMaclaurin, Method::Integral}) {
                const ResidualResult r = functional_equation_residual(sigma, x, m, 1e-12);
                worst = std::max(worst, r.residual / (r.combined_err + 1e-12));
            }
        }
    }
    return {worst <= 1.0, fmt("max residual / (combined + 1e-12) = %.3g on 6x6 grid", worst, 0)};
}

Outcome pole() {
    double worst = 0.0;
    for (const double x : {0.0, 1.0, 5.0}) worst = std::max(worst, std::abs(pole_probe(x, 1e-3) - 1.0));
    return {worst <= 1e-2, fmt("max |residue - 1| = %.3g (limit %.0e)", worst, 1e-2)};
}

Outcome norm_threshold() {
    double worst = 0.0;
    int disagreements = 0;
    for (const double sigma : {0.3, 0.5, 0.75, 1.25, 1.75, 2.5}) {
        for (const double alpha : {-2.0, -1.0, 0.0, 1.0}) {
            for (const double t : {0.0, 5.0, 14.13}) {
                const ConvergenceVerdict v = convergence_classify(Complex(sigma, t), WeightExponent(alpha));
                worst = std::max(worst, std::abs(v.fitted_exponent - (2.0 - 2.0 * sigma + alpha)));
                const double margin = sigma - (3.0 + alpha) / 2.0;
                if (margin > 0.1 && v.verdict != Verdict::Convergent) ++disagreements;
                if (margin < -0.1 && v.verdict != Verdict::Divergent) ++disagreements;
            }
        }
    }
    const bool critical = convergence_classify(Complex(0.5, 14.13), WeightExponent(0.0)).verdict == Verdict::Divergent;
    return {worst <= 0.05 && disagreements == 0 && critical,
            fmt("max exponent error %.3g, verdict disagreements %.0f", worst, disagreements) +
                (critical ? ", z=0.5+14.13i Divergent" : ", z=0.5+14.13i NOT Divergent")};
}

Outcome dilation_unitarity() {
    const Grid grid = Grid::covering(0.01, 60.0);
    double worst = 0.0;
    for (const double lambda : {0.3, 1.0, 2.0, 5.0}) {
        for (const double alpha : {-2.0, 0.0, 1.5}) {
            worst = std::max(worst, weighted_dilation_check(lambda, WeightExponent(alpha), grid));
        }
    }
    return {worst <= 1e-6, fmt("max relative norm change %.3g (limit %.0e)", worst, 1e-6)};
}

Outcome a_alpha() {
    int wrong = 0;
    for (const double alpha : {-2.0, 0.0, 1.0}) {
        for (const double sigma : {-0.5, 0.5, 1.0, 0.5 + 1e-9}) {
            const AAlphaEigen e = a_alpha_eigendata(Complex(sigma, 10.0), WeightExponent(alpha));
            const bool on_line = sigma == (alpha + 1.0) / 2.0;
            if (e.is_real != on_line) ++wrong;
            if ((std::abs(e.eigenvalue.imag()) < 1e-14) != on_line) ++wrong;
        }
    }
    const bool lines = a_alpha_eigendata(0.5, WeightExponent(0.0)).critical_sigma == 0.5 &&
                       a_alpha_eigendata(0.5, WeightExponent(-2.0)).critical_sigma == -0.5;
    return {wrong == 0 && lines, fmt("realness mismatches %.0f; critical lines 0.5 (alpha=0), %.1f (alpha=-2)", wrong,
                                     a_alpha_eigendata(0.5, WeightExponent(-2.0)).critical_sigma)};
}

Outcome deficiency() {
    const DeficiencyResult plus = deficiency_diagnostic(DeficiencySign::Plus, 20.0);
    const DeficiencyResult minus = deficiency_diagnostic(DeficiencySign::Minus, 20.0);
    const double growth = minus.doubled_norm / minus.norm_estimate;
    const bool ok = std::abs(plus.norm_estimate - 0.5) <= 1e-12 &&
                    std::abs(plus.doubled_norm - plus.norm_estimate) < 1e-12 * plus.norm_estimate &&
                    growth >= std::exp(20.0);
    return {ok, fmt("plus norm %.17g, minus growth %.3g under doubling", plus.norm_estimate, growth)};
}

Outcome shift_algebra() {
    const Grid grid = Grid::covering(0.01, 40.0);
    const ShiftIsometry iso = shift_isometry_check(grid, 10);
    double worst = 0.0;
    for (const Complex z : {Complex(0.5), Complex(1.0), Complex(2.0), Complex(1.0, 3.0)}) {
        worst = std::max(worst, shift_adjoint_eigen_residual(z, grid).residual);
    }
    const bool ok = iso.r1 <= 1e-12 && iso.r2 <= 1e-12 && worst <= 1e-9;
    return {ok, fmt("max(r1, r2) = %.3g, S* eigen-residual %.3g", std::max(iso.r1, iso.r2), worst)};
}

Outcome eigenrelations() {
    const double hs[3] = {0.02, 0.01, 0.005};
    double lo = 1e300;
    double hi = 0.0;
    bool one_sign = true;
    bool zero_at_half = true;
    for (const Complex z : {Complex(0.5), Complex(2.0), Complex(0.75, 5.0)}) {
        double dil[3], itw[3];
        for (int k = 0; k < 3; ++k) {
            const Grid shifted = Grid::covering(hs[k], 20.0, 1.0 - 3.0 * hs[k]);
            const SpectralResidual pos = dilation_generator_residual(z, shifted, EigenSign::PositiveI);
            const SpectralResidual neg = dilation_generator_residual(z, shifted, EigenSign::NegativeI);
            const IntertwineResult it = intertwine_check(z, Grid::covering(hs[k], 20.0));
            dil[k] = pos.residual;
            itw[k] = it.sign == EigenSign::PositiveI ? it.best.residual : it.other_residual;
            if (z == Complex(0.5)) {
                zero_at_half = zero_at_half && pos.eigenvalue == Complex(0.0) && pos.residual == neg.residual &&
                               it.best.eigenvalue == Complex(0.0);
            } else {
                one_sign = one_sign && pos.residual < neg.residual && it.sign == EigenSign::PositiveI;
            }
        }
        for (int k = 0; k < 2; ++k) {
            for (const double ratio : {dil[k] / dil[k + 1], itw[k] / itw[k + 1]}) {
                lo = std::min(lo, ratio);
                hi = std::max(hi, ratio);
            }
        }
    }
    const bool ok = lo >= 3.5 && hi <= 4.5 && one_sign && zero_at_half;
    return {ok, fmt("h-halving ratios in [%.3f, %.3f]", lo, hi) + (one_sign ? ", sign +i throughout" : ", sign mixed")};
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome determinism(const std::string& cli) {
    if (cli.empty()) return {false, "no CLI path given"};
    const auto dir = std::filesystem::temp_directory_path();
    const std::string tag = std::to_string(::getpid());
    const std::filesystem::path paths[2] = {dir / ("psilab_suite_a_" + tag + ".csv"),
                                            dir / ("psilab_suite_b_" + tag + ".csv")};
    double slowest = 0.0;
    for (const auto& path : paths) {
        const std::string command = "\"" + cli + "\" suite --profile fast --csv \"" + path.string() + "\" 2>/dev/null";
        const auto start = std::chrono::steady_clock::now();
        const int status = std::system(command.c_str());
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        slowest = std::max(slowest, seconds);
        if (status == -1 || !WIFEXITED(status) || WEXITSTATUS(status) != 0) {
            return {false, fmt("suite exited with status %.0f after %.1f s", WIFEXITED(status) ? WEXITSTATUS(status) : -1,
                               seconds)};
        }
    }
    const std::string a = read_file(paths[0]);
    const std::string b = read_file(paths[1]);
    for (const auto& path : paths) std::filesystem::remove(path);
    const bool ok = !a.empty() && a == b && slowest <= 120.0;
    return {ok, std::to_string(a.size()) + " CSV bytes, " + (a == b ? "identical" : "DIFFERENT") +
                    fmt(", slowest run %.2f s (limit %.0f s)", slowest, 120.0)};
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"cross-method agreement", cross_method},
        {"boundary identity", boundary},
        {"functional equation", functional_equation},
        {"pole residue", pole},
        {"norm threshold", norm_threshold},
        {"weighted dilation unitarity", dilation_unitarity},
        {"A_alpha critical line", a_alpha},
        {"deficiency indices", deficiency},
        {"shift algebra", shift_algebra},
        {"dilation and intertwining eigenrelations", eigenrelations},
        {"determinism", [&] { return determinism(cli); }},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome{false, ""};
        const auto start = std::chrono::steady_clock::now();
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("threw: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!outcome.pass) ++failures;
        std::printf("%s criterion %zu (%s): %s [%.2f s]\n", outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    outcome.detail.c_str(), seconds);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
