#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "laglab/gridquad.hpp"

// Riesz transform kernel R(x,y) = pi^{-1/2} int_0^inf d/dx W_t(x,y) dt/sqrt(t)
// (kernel against d gamma_alpha), its eps-truncations on a grid, and the
// a-local maximal truncation operator.

namespace laglab {

struct RieszKernelJob {
    double alpha;

    // t-integration: u = sqrt(t) on (0,1] with geometric panels from 1 down
    // to |x-y|/sigma_cut, then doubling panels on (1, t_far/(alpha+1)].
    int points_per_panel = 8;
    double panel_ratio = 0.60;
    double sigma_cut = 14.0;
    double t_far = 40.0;

    explicit RieszKernelJob(double alpha_);

    // Denser profile for oracle comparisons.
    RieszKernelJob strict() const;
};

double riesz_kernel(const RieszKernelJob& job, double x, double y);

// Decreasing truncation radii plus the lacunary block base theta.
struct TruncationLadder {
    std::vector<double> radii;  // strictly decreasing
    double theta;               // > 1; blocks are [theta^j, theta^{j+1})

    TruncationLadder(std::vector<double> radii_, double theta_);

    // per_decade geometric radii spanning [r_min, r_max], descending.
    static TruncationLadder geometric(double r_min, double r_max, int per_decade,
                                      double theta);

    // Radii <= cap, preserving descending order.
    std::vector<double> capped(double cap) const;
};

// Shell decomposition of sum_j w_j K(x, x_j) f_j by distance from x,
// supporting all truncation radii of a ladder in one kernel pass. Nodes
// within 1e-12 of x are always excluded.
template <typename V>
struct ShellSums {
    std::vector<double> dist;     // ascending distances |x - x_j|
    std::vector<V> prefix;        // prefix[i] = sum of contributions with dist <= dist[i]
    V total{};

    // sum over |x - x_j| > eps.
    V truncated(double eps) const;
};

ShellSums<double> kernel_shell_sums(const std::function<double(double, double)>& kernel,
                                    const GridFunction& f, double x);
ShellSums<std::complex<double>> kernel_shell_sums_complex(
    const std::function<std::complex<double>(double, double)>& kernel,
    const GridFunction& f, double x);

// Quadrature of int_{|x-y|>eps} R(x,y) f(y) dgamma(y) as the nodal sum over
// grid nodes with |x - x_j| > eps.
double riesz_truncated(const RieszKernelJob& job, const GridFunction& f, double eps,
                       double x);

// Values for every radius of the (descending) list, one kernel row pass.
std::vector<double> riesz_truncated_ladder(const RieszKernelJob& job, const GridFunction& f,
                                           double x, const std::vector<double>& radii);

// sup over ladder radii <= a m(x) of |R_eps f(x)|; throws if no radius
// qualifies.
double riesz_maximal_local(const RieszKernelJob& job, const GridFunction& f, double a,
                           double x, const TruncationLadder& ladder);

// True when at least 4 grid nodes fall in (x-2eps, x-eps) u (x+eps, x+2eps).
bool truncation_resolved(const GridFunction& f, double x, double eps);

}  // namespace laglab
