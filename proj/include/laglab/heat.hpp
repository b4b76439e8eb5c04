#pragma once

#include "laglab/gridquad.hpp"

// Laguerre heat semigroup kernel W_t(x,y) (kernel against d gamma_alpha(y))
// in three equivalent representations, with analytic x- and t-derivatives,
// and the semigroup action on grid functions. Eigenfunctions are the
// orthonormal Laguerre functions with eigenvalue lambda_k = 2k + alpha + 1.

namespace laglab {

struct HeatKernelPoint {
    double t, x, y;

    HeatKernelPoint(double t_, double x_, double y_);
};

struct ProductFormulaPoint {
    double x, y, s;  // s in (-1, 1)

    ProductFormulaPoint(double x_, double y_, double s_);
};

// (q_minus, q_plus) with q_{+-} = x^2 + y^2 +- 2xys.
std::pair<double, double> q_pm(const ProductFormulaPoint& pt);
double q_minus(double x, double y, double s);
double q_plus(double x, double y, double s);

// Gegenbauer product-formula density
// Pi_alpha(s) = Gamma(a+1) / (Gamma(a+1/2) Gamma(1/2)) (1-s^2)^{a-1/2},
// normalized so its integral over (-1,1) is 1.
double pi_alpha(double alpha, double s);

// Leading constant of pi_alpha (the factor in front of (1-s^2)^{a-1/2}).
double pi_alpha_constant(double alpha);

// Kernel value and derivatives at one point, sharing the Bessel work.
struct HeatPointValues {
    double w;      // W_t(x,y)
    double dw_dx;  // d/dx W_t(x,y)
    double dw_dt;  // d/dt W_t(x,y)
};

HeatPointValues heat_eval(double alpha, double t, double x, double y);

// Closed Bessel form, evaluated in log space.
double heat_closed(double alpha, const HeatKernelPoint& pt);
double heat_closed(double alpha, double t, double x, double y);

// Truncated spectral sum over degrees 0..K.
double heat_series(double alpha, const HeatKernelPoint& pt, int K);

// Product-formula s-integral (Gauss-Jacobi in s); equals heat_closed.
double heat_s_rep(double alpha, const HeatKernelPoint& pt);
double heat_s_rep(double alpha, double t, double x, double y);

double heat_dx(double alpha, const HeatKernelPoint& pt);
double heat_dt(double alpha, const HeatKernelPoint& pt);

// (W_t f)(x_i) = sum_j w_j W_t(x_i, x_j) f(x_j).
GridFunction apply_heat(double alpha, const GridFunction& f, double t);

}  // namespace laglab
