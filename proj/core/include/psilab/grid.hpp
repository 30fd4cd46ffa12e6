#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace psilab {

/// Uniform half-line discretization x_i = offset + i·spacing, i = 0..count-1.
///
/// Nodes are strictly positive; the default offset h/2 keeps x = 0 off the grid.
class Grid {
public:
    /// Throws DomainError unless spacing ∈ (0, 0.1], count in [16, kMaxCount],
    /// offset > 0 and extent >= 10.
    Grid(double spacing, std::size_t count, double offset);
    Grid(double spacing, std::size_t count);

    /// Smallest grid with the given spacing whose extent reaches `extent`.
    static Grid covering(double spacing, double extent, double offset);
    static Grid covering(double spacing, double extent);

    double spacing() const { return spacing_; }
    std::size_t count() const { return count_; }
    double offset() const { return offset_; }
    double extent() const { return offset_ + static_cast<double>(count_ - 1) * spacing_; }
    double node(std::size_t i) const { return offset_ + static_cast<double>(i) * spacing_; }

    /// Number of nodes in a unit translation; throws GridMismatch unless 1/h is an integer within 1e-12.
    std::size_t unit_shift() const;

    bool operator==(const Grid&) const = default;

    static constexpr std::size_t kMaxCount = 20000;

private:
    double spacing_;
    std::size_t count_;
    double offset_;
};

/// Complex samples on a grid.
struct GridFunction {
    Grid grid;
    std::vector<std::complex<double>> samples;

    explicit GridFunction(const Grid& g) : grid(g), samples(g.count()) {}
    GridFunction(const Grid& g, std::vector<std::complex<double>> values);

    template <typename F>
    static GridFunction sample(const Grid& g, F&& f) {
        GridFunction out(g);
        for (std::size_t i = 0; i < g.count(); ++i) out.samples[i] = f(g.node(i));
        return out;
    }
};

/// Trapezoid-weighted ℓ² norm of consecutive samples with the given spacing.
double discrete_norm(std::span<const std::complex<double>> values, double spacing);
double discrete_norm(const GridFunction& f);

}  // namespace psilab
