#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace psilab::quad {

/// Gauss–Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Nodes and weights of the `order`-point Gauss–Legendre rule (Newton on P_n).
GaussRule gauss_legendre(int order);

struct AdaptiveResult {
    double value = 0.0;
    double abs_err = 0.0;
    int intervals = 0;
};

/// Globally adaptive Gauss–Kronrod (7/15) integration of a real function.
///
/// Bisects the interval with the largest error until the summed error drops
/// below max(abs_tol, rel_tol * |value|). Throws QuadratureFailure once
/// `max_intervals` is exhausted.
AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                  double rel_tol, double abs_tol, int max_intervals = 2000);

}  // namespace psilab::quad
