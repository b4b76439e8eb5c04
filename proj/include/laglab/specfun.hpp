#pragma once

#include <complex>

// Scratch-built special functions: Gamma / log-Gamma (real and complex on
// Re(z) >= 0.5), the regularized lower incomplete gamma P(s,x), the scaled
// modified Bessel function e^{-z} I_nu(z) for nu >= -1/2, and Laguerre
// polynomials in the x^2 variable normalized to be orthonormal in
// L^2(gamma_alpha).

namespace laglab {

struct LaguerreParams {
    double alpha;  // order, > -1/2
    int k;         // degree, >= 0

    LaguerreParams(double alpha_, int k_);
};

struct BesselOrder {
    double nu;  // >= -1/2

    explicit BesselOrder(double nu_);
};

// Gamma(x) for x > 0. Relative error <= 1e-13 on [0.1, 50].
double gamma_fn(double x);

// log Gamma(x) for x > 0; safe for large x where Gamma overflows.
double log_gamma(double x);

// log Gamma(z) for complex z with Re(z) >= 0.5 (Lanczos).
std::complex<double> log_gamma(std::complex<double> z);
std::complex<double> gamma_fn(std::complex<double> z);

// Regularized lower incomplete gamma P(s,x) = gamma(s,x)/Gamma(s), s > 0,
// x >= 0. Series for x < s+1, continued fraction otherwise.
double reg_lower_inc_gamma(double s, double x);

// e^{-z} I_nu(z), z >= 0. Ascending series below the crossover
// z* = min(30 + 2 nu^2, 600), large-argument asymptotic expansion above.
double bessel_i_scaled(BesselOrder nu, double z);
double bessel_i_scaled(double nu, double z);

// Branch internals, exposed for the seam-agreement test.
double bessel_i_scaled_series(double nu, double z);
double bessel_i_scaled_asymptotic(double nu, double z);
double bessel_i_crossover(double nu);

// Orthonormality factor sqrt(Gamma(a+1) k! / Gamma(a+k+1)).
double laguerre_norm_factor(double alpha, int k);

// Classical generalized Laguerre polynomial L_k^{(alpha)}(u) by three-term
// recurrence.
double laguerre_classical(double alpha, int k, double u);

// Orthonormal Laguerre function in the x^2 variable, x >= 0.
double laguerre_eval(const LaguerreParams& p, double x);

// d/dx of laguerre_eval, x > 0.
double laguerre_derivative(const LaguerreParams& p, double x);

// Evaluates laguerre_eval for all degrees 0..kmax in one recurrence pass.
// out must have room for kmax+1 values.
void laguerre_eval_all(double alpha, int kmax, double x, double* out);

}  // namespace laglab
