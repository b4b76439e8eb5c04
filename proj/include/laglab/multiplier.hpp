#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>

#include "laglab/gridquad.hpp"
#include "laglab/riesz.hpp"
#include "laglab/varosc.hpp"

// Laplace-transform-type spectral multipliers: the symbol
// M(x) = x int_0^inf phi(t) e^{-xt} dt for bounded phi, the kernel
// K_phi(x,y) = -int_0^inf phi(t) d/dt W_t(x,y) dt, grid truncations, and
// the a-local maximal operator. Imaginary powers use
// phi_eta(t) = t^{-i eta} / Gamma(1 - i eta), which gives M(x) = x^{i eta}.

namespace laglab {

struct LaplaceSymbol {
    std::string name;
    std::function<cplx(double)> phi;
    std::optional<std::function<cplx(double)>> phi_prime;
    // C with |phi'(t)| <= C/t when the symbol satisfies the multiplier
    // hypothesis; unset otherwise.
    std::optional<double> derivative_bound_constant;

    bool complex_valued = false;

    static LaplaceSymbol constant();
    static LaplaceSymbol exponential();           // phi(t) = e^{-t}
    static LaplaceSymbol rational();              // phi(t) = 1/(1+t)
    static LaplaceSymbol imaginary_power(double eta);
    // Parses "constant" | "exp" | "rational" | "imaginary-power:<eta>".
    static LaplaceSymbol by_name(const std::string& spec);
};

// Verifies |phi'(t)| t <= C on a log grid over [t_lo, t_hi]; returns the
// observed sup. Throws std::invalid_argument when the symbol carries no
// derivative.
double symbol_hypothesis_sup(const LaplaceSymbol& s, double t_lo = 1e-6, double t_hi = 1e6,
                             int points_per_decade = 8);

// M(x) = x int_0^inf phi(t) e^{-xt} dt, composite quadrature on (0, 60/x].
cplx symbol_M(const LaplaceSymbol& s, double x);

struct MultiplierKernelJob {
    double alpha;
    LaplaceSymbol symbol;

    int points_per_panel = 8;
    double panel_ratio = 0.60;
    double sigma_cut = 14.0;
    double t_far = 40.0;

    // When the symbol carries a derivative, every kernel evaluation also
    // computes the partial-integration form and enforces agreement to
    // dual_form_tol (relative). Disable for bulk experiment sweeps after a
    // sampled preflight.
    bool dual_form_check = true;
    double dual_form_tol = 1e-4;

    MultiplierKernelJob(double alpha_, LaplaceSymbol symbol_);
};

// -int phi(t) dW/dt dt. Throws std::runtime_error when the dual-form check
// is enabled and the two forms disagree beyond dual_form_tol.
cplx multiplier_kernel(const MultiplierKernelJob& job, double x, double y);

// Both forms, no agreement enforcement (for diagnostics/tests).
struct DualFormValues {
    cplx phi_form;        // -int phi(t) dW/dt dt
    cplx phi_prime_form;  // int phi'(t) W_t dt (when phi' available)
    bool has_prime = false;
};
DualFormValues multiplier_kernel_forms(const MultiplierKernelJob& job, double x, double y);

// Nodal truncation sum_{|x-x_j|>eps} w_j K_phi(x,x_j) f_j.
cplx q_truncated(const MultiplierKernelJob& job, const GridFunction& f, double eps, double x);

std::vector<cplx> q_truncated_ladder(const MultiplierKernelJob& job, const GridFunction& f,
                                     double x, const std::vector<double>& radii);

// sup over ladder radii <= a m(x) of |Q_eps f(x)|.
double q_maximal_local(const MultiplierKernelJob& job, const GridFunction& f, double a,
                       double x, const TruncationLadder& ladder);

OperatorFamily multiplier_operator_family(const MultiplierKernelJob& job);

}  // namespace laglab
