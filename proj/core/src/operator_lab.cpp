#include "psilab/operator_lab.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "psilab/errors.hpp"
#include "psilab/psi_eval.hpp"
#include "psilab/quadrature.hpp"

namespace psilab {

namespace {

constexpr Complex kI{0.0, 1.0};

// Relative residual of `image - eigenvalue * v` over nodes [first, last).
double relative_residual(std::span<const Complex> image, std::span<const Complex> v, Complex eigenvalue,
                         std::size_t first, std::size_t last, double h) {
    std::vector<Complex> diff(last - first);
    for (std::size_t i = first; i < last; ++i) diff[i - first] = image[i] - eigenvalue * v[i];
    return discrete_norm(diff, h) / discrete_norm(v.subspan(first, last - first), h);
}

// A f = -i (x f' + f/2) at nodes [first, last) by central differences.
std::vector<Complex> apply_dilation_generator(const Grid& grid, std::span<const Complex> f, std::size_t first,
                                              std::size_t last) {
    std::vector<Complex> out(f.size());
    const double h = grid.spacing();
    for (std::size_t i = first; i < last; ++i) {
        const Complex derivative = (f[i + 1] - f[i - 1]) / (2.0 * h);
        out[i] = -kI * (grid.node(i) * derivative + 0.5 * f[i]);
    }
    return out;
}

}  // namespace

void StencilMatrix::set(std::size_t row, std::size_t col, Complex value) {
    auto& r = rows_.at(row);
    for (auto& [c, v] : r) {
        if (c == col) {
            v = value;
            return;
        }
    }
    r.emplace_back(col, value);
}

Complex StencilMatrix::entry(std::size_t row, std::size_t col) const {
    for (const auto& [c, v] : rows_.at(row)) {
        if (c == col) return v;
    }
    return 0.0;
}

std::vector<Complex> StencilMatrix::apply(std::span<const Complex> v) const {
    if (v.size() != rows_.size()) throw DomainError("StencilMatrix::apply: size mismatch");
    std::vector<Complex> out(v.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Complex acc = 0.0;
        for (const auto& [c, value] : rows_[i]) acc += value * v[c];
        out[i] = acc;
    }
    return out;
}

std::vector<Complex> StencilMatrix::to_dense() const {
    const std::size_t n = rows_.size();
    if (n > 2048) throw DomainError("StencilMatrix::to_dense: limited to n <= 2048");
    std::vector<Complex> dense(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [c, value] : rows_[i]) dense[i * n + c] = value;
    }
    return dense;
}

StencilMatrix build_momentum_dirichlet(const Grid& grid) {
    const std::size_t n = grid.count();
    const double h = grid.spacing();
    StencilMatrix m(n);

    // First node: f'(x_0) from {0, x_0, x_1} with f(0) = 0; left gap a, right gap h.
    const double a = grid.offset();
    m.set(0, 0, -kI * ((h - a) / (a * h)));
    m.set(0, 1, -kI * (a / (h * (a + h))));

    for (std::size_t i = 1; i + 1 < n; ++i) {
        m.set(i, i - 1, kI / (2.0 * h));
        m.set(i, i + 1, -kI / (2.0 * h));
    }

    m.set(n - 1, n - 1, -kI * (3.0 / (2.0 * h)));
    m.set(n - 1, n - 2, -kI * (-4.0 / (2.0 * h)));
    m.set(n - 1, n - 3, -kI * (1.0 / (2.0 * h)));
    return m;
}

double interior_hermitian_defect(const StencilMatrix& m) {
    const std::size_t n = m.size();
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        for (const auto& [j, value] : m.row(i)) {
            if (j == 0 || j + 1 == n) continue;
            worst = std::max(worst, std::abs(value - std::conj(m.entry(j, i))));
        }
    }
    return worst;
}

SpectralResidual exp_eigen_residual(Complex z, const Grid& grid) {
    if (!(z.real() > 0.0)) throw DomainError("exp_eigen_residual: e^{-zx} is square-integrable only for Re z > 0");
    if (grid.extent() < 30.0 / z.real()) throw DomainError("exp_eigen_residual: grid too short to resolve the decay");
    const auto g = GridFunction::sample(grid, [z](double x) { return std::exp(-z * x); });
    const auto image = build_momentum_dirichlet(grid).apply(g.samples);
    const Complex eigenvalue = kI * z;
    const std::size_t n = grid.count();
    return {eigenvalue,
            relative_residual(image, g.samples, eigenvalue, kBoundaryLayer, n - kBoundaryLayer, grid.spacing()), true};
}

double exp_growth_ratio(Complex z, const Grid& grid) {
    const auto g = GridFunction::sample(grid, [z](double x) { return std::exp(-z * x); });
    const std::span<const Complex> all(g.samples);
    return discrete_norm(all, grid.spacing()) / discrete_norm(all.first(grid.count() / 2), grid.spacing());
}

std::string_view to_string(Integrability c) {
    return c == Integrability::SquareIntegrable ? "SquareIntegrable" : "Divergent";
}

DeficiencyResult deficiency_diagnostic(DeficiencySign sign, double x_max) {
    if (!(x_max >= 10.0)) throw DomainError("deficiency_diagnostic: x_max must be >= 10");
    if (x_max > 150.0) throw DomainError("deficiency_diagnostic: x_max must be <= 150");
    const double rate = (sign == DeficiencySign::Plus) ? -2.0 : 2.0;
    const auto density = [rate](double x) { return std::exp(rate * x); };
    const auto norm_to = [&](double upper) {
        return quad::integrate_adaptive(density, 0.0, upper, 1e-15, 1e-300).value;
    };
    DeficiencyResult out;
    out.norm_estimate = norm_to(x_max);
    out.doubled_norm = norm_to(2.0 * x_max);
    const bool saturated = std::abs(out.doubled_norm - out.norm_estimate) < 1e-12 * out.norm_estimate;
    out.classification = saturated ? Integrability::SquareIntegrable : Integrability::Divergent;
    return out;
}

GridFunction shift_apply(const GridFunction& f) {
    const std::size_t m = f.grid.unit_shift();
    GridFunction out(f.grid);
    for (std::size_t i = m; i < f.samples.size(); ++i) out.samples[i] = f.samples[i - m];
    return out;
}

GridFunction shift_adjoint_apply(const GridFunction& f) {
    const std::size_t m = f.grid.unit_shift();
    GridFunction out(f.grid);
    for (std::size_t i = 0; i + m < f.samples.size(); ++i) out.samples[i] = f.samples[i + m];
    return out;
}

bool has_tail_mass(const GridFunction& f) {
    const std::size_t m = std::min(f.grid.unit_shift(), f.samples.size());
    const double total = discrete_norm(f);
    double tail = 0.0;
    for (std::size_t i = f.samples.size() - m; i < f.samples.size(); ++i) tail = std::max(tail, std::abs(f.samples[i]));
    return tail > 1e-10 * total;
}

ShiftIsometry shift_isometry_check(const Grid& grid, int trials, std::uint64_t seed) {
    if (trials < 10) throw DomainError("shift_isometry_check: need at least 10 trials");
    const std::size_t m = grid.unit_shift();
    const std::size_t n = grid.count();
    if (n <= 2 * m) throw DomainError("shift_isometry_check: grid shorter than two unit intervals");

    std::mt19937_64 rng(seed);
    const double usable = grid.extent() - 1.0;
    std::uniform_real_distribution<double> center(0.2, std::max(0.3, usable - 2.0));
    std::uniform_real_distribution<double> width(0.1, 1.0);
    std::normal_distribution<double> amplitude;

    ShiftIsometry out;
    for (int trial = 0; trial < trials; ++trial) {
        GridFunction f(grid);
        for (int bump = 0; bump < 3; ++bump) {
            const double c = center(rng);
            const double w = width(rng);
            const Complex amp(amplitude(rng), amplitude(rng));
            for (std::size_t i = 0; i < n; ++i) {
                const double u = (grid.node(i) - c) / w;
                f.samples[i] += amp * std::exp(-0.5 * u * u);
            }
        }
        // Compact support inside the grid keeps S*S = I exact.
        for (std::size_t i = n - m; i < n; ++i) f.samples[i] = 0.0;

        const double norm = discrete_norm(f);
        const GridFunction sf = shift_apply(f);
        const GridFunction back = shift_adjoint_apply(sf);
        const GridFunction forward = shift_apply(shift_adjoint_apply(f));

        GridFunction d1(grid);
        GridFunction d2(grid);
        for (std::size_t i = 0; i < n; ++i) {
            d1.samples[i] = back.samples[i] - f.samples[i];
            const Complex expected = grid.node(i) < 1.0 ? Complex(0.0) : f.samples[i];  // f - Pf
            d2.samples[i] = forward.samples[i] - expected;
        }
        out.r1 = std::max(out.r1, discrete_norm(d1) / norm);
        out.r2 = std::max(out.r2, discrete_norm(d2) / norm);
    }
    return out;
}

SpectralResidual shift_adjoint_eigen_residual(Complex z, const Grid& grid) {
    if (!(z.real() > 0.0)) throw DomainError("shift_adjoint_eigen_residual: requires Re z > 0");
    const std::size_t m = grid.unit_shift();
    const std::size_t n = grid.count();
    if (n <= m + 2 * kBoundaryLayer) throw DomainError("shift_adjoint_eigen_residual: grid too short");
    const auto g = GridFunction::sample(grid, [z](double x) { return std::exp(-z * x); });
    const GridFunction image = shift_adjoint_apply(g);
    const Complex eigenvalue = std::exp(-z);
    return {eigenvalue,
            relative_residual(image.samples, g.samples, eigenvalue, kBoundaryLayer, n - m - kBoundaryLayer,
                              grid.spacing()),
            true};
}

GridFunction delta_apply(const GridFunction& f) {
    GridFunction out = shift_apply(f);
    for (std::size_t i = 0; i < out.samples.size(); ++i) out.samples[i] = f.samples[i] - out.samples[i];
    return out;
}

std::string_view to_string(EigenSign sign) {
    return sign == EigenSign::NegativeI ? "negative-i" : "positive-i";
}

Complex dilation_eigenvalue(Complex z, EigenSign sign) {
    const Complex base = kI * (z - 0.5);
    return sign == EigenSign::NegativeI ? -base : base;
}

SpectralResidual dilation_generator_residual(Complex z, const Grid& grid, EigenSign sign) {
    if (!(z.real() > 0.0)) throw DomainError("dilation_generator_residual: requires Re z > 0");
    if (grid.offset() < 10.0 * grid.spacing() * (1.0 - 1e-12)) {
        throw DomainError("dilation_generator_residual: offset must be at least 10h to resolve x^{-z}");
    }
    const auto f = GridFunction::sample(grid, [z](double x) { return complex_power(x, z); });
    const std::size_t first = kBoundaryLayer;
    const std::size_t last = grid.count() - kBoundaryLayer;
    const auto image = apply_dilation_generator(grid, f.samples, first, last);
    const Complex eigenvalue = dilation_eigenvalue(z, sign);
    return {eigenvalue, relative_residual(image, f.samples, eigenvalue, first, last, grid.spacing()), true};
}

IntertwineResult intertwine_check(Complex z, const Grid& grid) {
    if (!(z.real() > 0.0)) throw DomainError("intertwine_check: requires Re z > 0");
    if (std::abs(z - 1.0) <= kIntegralPoleGuard) throw PoleError("intertwine_check: z too close to 1");
    const auto psi = GridFunction::sample(grid, [z](double x) { return psi_euler_maclaurin(z, x).value; });
    const GridFunction u = delta_apply(psi);

    const double h = grid.spacing();
    const std::size_t start = static_cast<std::size_t>(std::ceil((1.0 + 3.0 * h - grid.offset()) / h + 1e-9));
    const std::size_t first = std::max(start, kBoundaryLayer);
    const std::size_t last = grid.count() - kBoundaryLayer;
    if (first + 8 >= last) throw DomainError("intertwine_check: grid too short");

    const auto image = apply_dilation_generator(grid, u.samples, first, last);
    const EigenSign signs[2] = {EigenSign::NegativeI, EigenSign::PositiveI};
    SpectralResidual candidates[2];
    for (int s = 0; s < 2; ++s) {
        const Complex eigenvalue = dilation_eigenvalue(z, signs[s]);
        candidates[s] = {eigenvalue, relative_residual(image, u.samples, eigenvalue, first, last, h), true};
    }
    const int pick = candidates[1].residual <= candidates[0].residual ? 1 : 0;
    IntertwineResult out;
    out.best = candidates[pick];
    out.sign = signs[pick];
    out.other_residual = candidates[1 - pick].residual;
    return out;
}

}  // namespace psilab
