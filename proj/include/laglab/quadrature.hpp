#pragma once

#include <cstddef>
#include <vector>

// Quadrature building blocks: Gauss-Legendre rules on [-1,1], symmetric
// Gauss-Jacobi rules for the weight (1-s^2)^beta (Golub-Welsch), and
// composite panel helpers.

namespace laglab {

struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }
};

// n-point Gauss-Legendre rule on [-1,1]. Cached per n, thread-safe.
const QuadRule& gauss_legendre(int n);

// n-point Gauss-Jacobi rule on [-1,1] for weight (1-s)^beta (1+s)^beta,
// beta > -1. Weights sum to 2^{2 beta + 1} B(beta+1, beta+1).
// Cached per (n, beta), thread-safe.
const QuadRule& gauss_jacobi_symmetric(int n, double beta);

// Integrates f over [a,b] with the n-point Gauss-Legendre rule.
template <typename F>
double panel_integrate(const F& f, double a, double b, const QuadRule& rule) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i)
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * sum;
}

// Geometric panel breakpoints from hi down to lo with the given ratio in
// (0,1); returned increasing, endpoints included.
std::vector<double> geometric_breakpoints(double lo, double hi, double ratio);

// Composite Gauss-Legendre integral of f over consecutive panels given by
// increasing breakpoints.
template <typename F>
double composite_integrate(const F& f, const std::vector<double>& brk, const QuadRule& rule) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < brk.size(); ++i)
        sum += panel_integrate(f, brk[i], brk[i + 1], rule);
    return sum;
}

}  // namespace laglab
