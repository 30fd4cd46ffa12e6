#pragma once

// Discretized operators on L²(0, ∞).
//
// Spectral statements are checked by residuals against known eigenpairs
// rather than by solving eigenproblems: e^{-zx} for the momentum adjoint,
// x^{-z} for the dilation generator, e^{-z} for the adjoint shift.

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "psilab/grid.hpp"
#include "psilab/special_fn.hpp"

namespace psilab {

/// Square matrix stored row by row as (column, value) pairs; finite-difference
/// stencils have at most three entries per row.
class StencilMatrix {
public:
    explicit StencilMatrix(std::size_t n) : rows_(n) {}

    std::size_t size() const { return rows_.size(); }
    void set(std::size_t row, std::size_t col, Complex value);
    Complex entry(std::size_t row, std::size_t col) const;
    const std::vector<std::pair<std::size_t, Complex>>& row(std::size_t i) const { return rows_[i]; }

    std::vector<Complex> apply(std::span<const Complex> v) const;

    /// Row-major dense copy; limited to n <= 2048.
    std::vector<Complex> to_dense() const;

private:
    std::vector<std::vector<std::pair<std::size_t, Complex>>> rows_;
};

/// -i d/dx with f(0) = 0: second-order central differences, a three-point
/// nonuniform stencil through the boundary value 0 at the first node, and a
/// one-sided second-order stencil at the last node.
StencilMatrix build_momentum_dirichlet(const Grid& grid);

/// max |M_ij - conj(M_ji)| over the principal block with the boundary rows removed.
double interior_hermitian_defect(const StencilMatrix& m);

struct SpectralResidual {
    Complex eigenvalue;
    double residual = 0.0;  ///< ‖Mv - λv‖ / ‖v‖ in the trapezoid norm
    bool interior_only = true;
};

/// Nodes dropped at each end when residuals are restricted to the interior.
inline constexpr std::size_t kBoundaryLayer = 3;

/// g_z(x) = e^{-zx} against eigenvalue iz of the momentum stencil.
/// Requires Re z > 0 and grid.extent() >= 30 / Re z (DomainError otherwise).
SpectralResidual exp_eigen_residual(Complex z, const Grid& grid);

/// ‖g_z‖ on the whole grid over ‖g_z‖ on its first half.
double exp_growth_ratio(Complex z, const Grid& grid);

enum class DeficiencySign { Plus, Minus };
enum class Integrability { SquareIntegrable, Divergent };

std::string_view to_string(Integrability c);

struct DeficiencyResult {
    double norm_estimate = 0.0;  ///< ∫_0^{x_max} |f|²
    double doubled_norm = 0.0;   ///< ∫_0^{2 x_max} |f|²
    Integrability classification = Integrability::Divergent;
};

/// Solutions of p* f = ±i f: e^{-x} (Plus) and e^{+x} (Minus). Square-integrability
/// is decided by doubling x_max and testing for saturation (relative change < 1e-12).
DeficiencyResult deficiency_diagnostic(DeficiencySign sign, double x_max);

/// Sf(x) = f(x - 1), zero on (0, 1).
GridFunction shift_apply(const GridFunction& f);

/// S*f(x) = f(x + 1); the last unit interval is filled with zeros.
GridFunction shift_adjoint_apply(const GridFunction& f);

/// True if |f| on the last unit interval exceeds 1e-10 ‖f‖, i.e. S* truncates mass.
bool has_tail_mass(const GridFunction& f);

struct ShiftIsometry {
    double r1 = 0.0;  ///< max ‖S*Sf - f‖ / ‖f‖
    double r2 = 0.0;  ///< max ‖SS*f - (f - Pf)‖ / ‖f‖, P = restriction to (0, 1)
};

/// Random smooth test functions vanishing on the last unit interval.
ShiftIsometry shift_isometry_check(const Grid& grid, int trials, std::uint64_t seed = 20240917);

/// Relative residual of S* g_z - e^{-z} g_z, away from the truncated grid end.
SpectralResidual shift_adjoint_eigen_residual(Complex z, const Grid& grid);

/// Δf = f - Sf.
GridFunction delta_apply(const GridFunction& f);

/// Eigenvalue convention for the dilation generator: -i(z - 1/2) or +i(z - 1/2).
enum class EigenSign { NegativeI, PositiveI };

std::string_view to_string(EigenSign sign);
Complex dilation_eigenvalue(Complex z, EigenSign sign);

/// Applies A f = -i(x f' + f/2) (central differences) to x^{-z} and compares with
/// the eigenvalue of the chosen sign. Requires Re z > 0 and offset >= 10h.
SpectralResidual dilation_generator_residual(Complex z, const Grid& grid, EigenSign sign);

struct IntertwineResult {
    SpectralResidual best;
    EigenSign sign = EigenSign::PositiveI;
    double other_residual = 0.0;  ///< residual under the opposite sign
};

/// u = Δψ_z (analytically -x^{-z} for x > 1); A applied to u on nodes x > 1 + 3h,
/// compared with both eigenvalue signs.
IntertwineResult intertwine_check(Complex z, const Grid& grid);

}  // namespace psilab
