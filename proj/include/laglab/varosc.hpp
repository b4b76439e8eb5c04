#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "laglab/gridquad.hpp"
#include "laglab/riesz.hpp"

// Exact rho-variation of a finite value ladder (dynamic programming over
// subsequences), lacunary-block oscillation, and their a-local operator
// forms over truncation ladders. Complex values contribute through the
// modulus of increments.

namespace laglab {

using cplx = std::complex<double>;

// Truncation radii (strictly decreasing) with the operator values attached
// to them.
struct ValueLadder {
    std::vector<double> radii;
    std::vector<cplx> values;

    ValueLadder() = default;
    ValueLadder(std::vector<double> radii_, std::vector<cplx> values_);
    ValueLadder(std::vector<double> radii_, const std::vector<double>& real_values);

    std::size_t size() const { return radii.size(); }
};

// sup over subsequences of (sum |c_i - c_j|^rho)^{1/rho}, computed exactly
// by the O(n^2) recursion best(i) = max(0, max_{j<i} best(j) + |c_i-c_j|^rho).
double rho_variation(const ValueLadder& v, double rho);

// Exhaustive maximum over all subsequences; ladder length <= 14.
double brute_force_variation(const ValueLadder& v, double rho);

// Lacunary blocks [t_j, t_{j+1}): per block, sup over value pairs at radii
// inside the block; blocks with fewer than two radii contribute 0. Result
// is the l^2 combination of the block suprema. blocks must be increasing
// and cover all ladder radii.
double oscillation(const ValueLadder& v, const std::vector<double>& blocks);

// Blocks theta^j covering [lo, hi], increasing.
std::vector<double> lacunary_blocks(double theta, double lo, double hi);

// Family of truncated operators: values of T_eps f(x) for each radius of a
// descending list (one row pass per x).
using OperatorFamily =
    std::function<std::vector<cplx>(const GridFunction& f, double x,
                                    const std::vector<double>& radii)>;

OperatorFamily riesz_operator_family(const RieszKernelJob& job);

// rho-variation of {T_eps f(x) : eps <= a m(x) ladder radii}.
double local_variation_op(const GridFunction& f, const OperatorFamily& T, double rho,
                          double a, double x, const TruncationLadder& ladder);

// Oscillation over blocks theta^j intersected with (0, a m(x)].
double local_oscillation_op(const GridFunction& f, const OperatorFamily& T, double theta,
                            double a, double x, const TruncationLadder& ladder);

}  // namespace laglab
