#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "laglab/heat.hpp"

// Local/global decomposition geometry for the Riesz kernel: the regions
// L_tau / G_tau in (x,y,s) space, the smooth cutoff between them, the
// global majorant K(x,y,s), the local kernel (cutoff inserted into the
// (t,s) double integral), and empirical Calderon-Zygmund ratios against
// the reference measure m_alpha.

namespace laglab {

struct RegionParams {
    double alpha;
    double a = 1.0;    // admissibility scale reused in the region constant
    double tau = 1.0;  // region scale

    RegionParams(double alpha_, double a_, double tau_);
};

// sqrt(q_-(x,y,s)) <= a (1+alpha) tau / (1 + x + y).
bool in_region_L(const RegionParams& rp, const ProductFormulaPoint& pt);

struct CutoffSpec {
    // smoothstep order: 3 (cubic, C^1) or 5 (quintic, C^2)
    int order = 3;

    CutoffSpec() = default;
    explicit CutoffSpec(int order_);
};

// 1 on L_1, 0 on G_2, monotone smoothstep in
// u = sqrt(q_-) (1+x+y) / (a (1+alpha)) across 1 < u < 2.
double cutoff_phi(const CutoffSpec& cs, const RegionParams& rp, const ProductFormulaPoint& pt);

// Majorant of the global kernel part: 1 for s < 0, else
// (q_+/q_-)^{(alpha+1)/2} exp((x^2+y^2-sqrt(q_- q_+))/2). Throws on q_- = 0.
double global_majorant_K(double alpha, const ProductFormulaPoint& pt);

// int_{-1}^{1} K(x,y,s) chi_{G_1}(x,y,s) Pi_alpha(s) ds (Gauss-Jacobi with
// the region indicator).
double global_majorant_integral(const RegionParams& rp, double x, double y, int s_nodes = 96);

// Local Riesz kernel: the Riesz (t,s) double integral with the cutoff
// inserted; carries the e^{y^2} weight of the product formula (kernel
// against d gamma_alpha, same convention as riesz_kernel).
double local_riesz_kernel(const CutoffSpec& cs, const RegionParams& rp, double x, double y,
                          int s_nodes = 64, int t_points = 8);

// Evaluation-point pairs for empirical kernel ratios.
struct PointPair {
    double x, y;
};

// Near-diagonal pairs: x log-uniform on [0.05, 6], |x-y| log-uniform on
// [1e-3 m(x), m(x)], random side.
std::vector<PointPair> sample_near_diagonal_pairs(std::size_t count, std::uint64_t seed);

// sup over pairs of |k(x,y)| m_alpha(I(x,|x-y|)).
double cz_size_ratio(const std::function<double(double, double)>& kernel, double alpha,
                     const std::vector<PointPair>& pairs);

// sup over pairs of max(|d_x k|, |d_y k|) |x-y| m_alpha(I(x,|x-y|)) with
// central finite differences; measure(x, r) defaults to m_alpha mass and is
// injectable for sanity targets. step_frac scales the FD step by |x-y|.
double cz_gradient_ratio(const std::function<double(double, double)>& kernel, double alpha,
                         const std::vector<PointPair>& pairs, double step_frac = 1e-4,
                         const std::function<double(double, double)>* measure = nullptr);

}  // namespace laglab
