#include "psilab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "psilab/errors.hpp"

namespace psilab {

Grid::Grid(double spacing, std::size_t count, double offset)
    : spacing_(spacing), count_(count), offset_(offset) {
    if (!(spacing > 0.0 && spacing <= 0.1)) throw DomainError("Grid: spacing must lie in (0, 0.1]");
    if (count < 16 || count > kMaxCount) throw DomainError("Grid: count must lie in [16, 20000]");
    if (!(offset > 0.0) || !std::isfinite(offset)) throw DomainError("Grid: nodes must be strictly positive");
    if (extent() < 10.0) throw DomainError("Grid: extent must be at least 10");
}

Grid::Grid(double spacing, std::size_t count) : Grid(spacing, count, 0.5 * spacing) {}

Grid Grid::covering(double spacing, double extent, double offset) {
    if (!(spacing > 0.0)) throw DomainError("Grid: spacing must be positive");
    const double steps = std::ceil((extent - offset) / spacing - 1e-9);
    if (!(steps >= 0.0) || steps > static_cast<double>(kMaxCount)) {
        throw DomainError("Grid: requested extent needs too many nodes");
    }
    return Grid(spacing, static_cast<std::size_t>(steps) + 1, offset);
}

Grid Grid::covering(double spacing, double extent) { return covering(spacing, extent, 0.5 * spacing); }

std::size_t Grid::unit_shift() const {
    const double m = std::round(1.0 / spacing_);
    if (m < 1.0 || std::abs(m * spacing_ - 1.0) > 1e-12) {
        throw GridMismatch("Grid: 1/h is not an integer");
    }
    return static_cast<std::size_t>(m);
}

GridFunction::GridFunction(const Grid& g, std::vector<std::complex<double>> values)
    : grid(g), samples(std::move(values)) {
    if (samples.size() != grid.count()) throw DomainError("GridFunction: sample count does not match grid");
}

double discrete_norm(std::span<const std::complex<double>> values, double spacing) {
    if (values.empty()) return 0.0;
    double acc = 0.0;
    for (const auto& v : values) acc += std::norm(v);
    acc -= 0.5 * (std::norm(values.front()) + std::norm(values.back()));
    return std::sqrt(std::max(0.0, acc) * spacing);
}

double discrete_norm(const GridFunction& f) { return discrete_norm(f.samples, f.grid.spacing()); }

}  // namespace psilab
