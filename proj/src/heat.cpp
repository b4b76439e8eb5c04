#include "laglab/heat.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "laglab/parallel.hpp"
#include "laglab/quadrature.hpp"
#include "laglab/specfun.hpp"

namespace laglab {

HeatKernelPoint::HeatKernelPoint(double t_, double x_, double y_) : t(t_), x(x_), y(y_) {
    if (!(t > 0.0 && x > 0.0 && y > 0.0))
        throw std::domain_error("HeatKernelPoint: t, x, y must be positive");
}

ProductFormulaPoint::ProductFormulaPoint(double x_, double y_, double s_)
    : x(x_), y(y_), s(s_) {
    if (!(x > 0.0 && y > 0.0))
        throw std::domain_error("ProductFormulaPoint: x, y must be positive");
    if (!(s > -1.0 && s < 1.0))
        throw std::domain_error("ProductFormulaPoint: s must lie in (-1,1)");
}

double q_minus(double x, double y, double s) { return x * x + y * y - 2.0 * x * y * s; }
double q_plus(double x, double y, double s) { return x * x + y * y + 2.0 * x * y * s; }

std::pair<double, double> q_pm(const ProductFormulaPoint& pt) {
    return {q_minus(pt.x, pt.y, pt.s), q_plus(pt.x, pt.y, pt.s)};
}

double pi_alpha_constant(double alpha) {
    return std::exp(log_gamma(alpha + 1.0) - log_gamma(alpha + 0.5) - log_gamma(0.5));
}

double pi_alpha(double alpha, double s) {
    if (!(alpha > -0.5)) throw std::domain_error("pi_alpha: alpha must be > -1/2");
    if (!(s > -1.0 && s < 1.0)) throw std::domain_error("pi_alpha: s must lie in (-1,1)");
    return pi_alpha_constant(alpha) *
           std::exp((alpha - 0.5) * std::log1p(-s * s));
}

HeatPointValues heat_eval(double alpha, double t, double x, double y) {
    // W = G * Ibar_a(z) with
    //   G = exp(lgam(a+1) - t(a+1) - log b - a log(b/2) - a log z + expo),
    //   b = 1 - e^{-2t}, z = 2 e^{-t} x y / b, expo = z - d (x^2+y^2),
    //   d = e^{-2t}/b, and Ibar the scaled Bessel e^{-z} I(z).
    // expo is formed as -e^{-t} (e^{-t}(x^2+y^2) - 2xy) / b, which is
    // symmetric in (x,y) and avoids the huge intermediate z.
    const double b = -std::expm1(-2.0 * t);
    const double w = std::exp(-t);
    const double z = 2.0 * w * x * y / b;
    const double c = 2.0 * w / b;
    const double d = w * w / b;
    const double expo = -w * (w * (x * x + y * y) - 2.0 * x * y) / b;
    const double logG = log_gamma(alpha + 1.0) - t * (alpha + 1.0) - std::log(b) -
                        alpha * std::log(0.5 * b) - alpha * std::log(z) + expo;
    const double G = std::exp(logG);
    const double i0 = bessel_i_scaled(alpha, z);
    const double i1 = bessel_i_scaled(alpha + 1.0, z);

    HeatPointValues out;
    out.w = G * i0;
    out.dw_dx = G * (c * y * i1 - 2.0 * d * x * i0);

    const double bp_over_b = 2.0 * w * w / b;  // b'/b with b' = 2 e^{-2t}
    const double zp = -z * (1.0 + bp_over_b);
    const double diag = -(alpha + 1.0) * (1.0 + bp_over_b) +
                        d * (2.0 + bp_over_b) * (x * x + y * y);
    out.dw_dt = G * (i0 * diag + i1 * zp);
    return out;
}

double heat_closed(double alpha, double t, double x, double y) {
    if (!(t > 0.0 && x > 0.0 && y > 0.0))
        throw std::domain_error("heat_closed: t, x, y must be positive");
    return heat_eval(alpha, t, x, y).w;
}

double heat_closed(double alpha, const HeatKernelPoint& pt) {
    return heat_eval(alpha, pt.t, pt.x, pt.y).w;
}

double heat_series(double alpha, const HeatKernelPoint& pt, int K) {
    if (K < 0) throw std::domain_error("heat_series: K must be >= 0");
    std::vector<double> lx(K + 1), ly(K + 1);
    laguerre_eval_all(alpha, K, pt.x, lx.data());
    laguerre_eval_all(alpha, K, pt.y, ly.data());
    double sum = 0.0;
    for (int k = K; k >= 0; --k)
        sum += std::exp(-(2.0 * k + alpha + 1.0) * pt.t) * lx[k] * ly[k];
    return sum;
}

namespace {

int srep_node_count(double bessel_arg) {
    // The s-integrand is exp(linear in s); the Gauss rule needs the node
    // count to grow with the exponent scale.
    const int n = static_cast<int>(48.0 + 0.85 * bessel_arg);
    return std::min(n, 2000);
}

}  // namespace

double heat_s_rep(double alpha, double t, double x, double y) {
    if (!(t > 0.0 && x > 0.0 && y > 0.0))
        throw std::domain_error("heat_s_rep: t, x, y must be positive");
    const double b = -std::expm1(-2.0 * t);
    const double w = std::exp(-t);
    const double zscale = 2.0 * w * x * y / b;
    const QuadRule& gj = gauss_jacobi_symmetric(srep_node_count(zscale), alpha - 0.5);

    // integrand exponent: -q_-(wx, y, s)/b + y^2 = E0 + (z/ s-slope) s
    const double e0 = -((w * x) * (w * x) + y * y) / b + y * y;
    double emax = e0 + (zscale > 0 ? zscale * gj.nodes.back() : zscale * gj.nodes.front());
    double sum = 0.0;
    for (std::size_t i = 0; i < gj.size(); ++i)
        sum += gj.weights[i] * std::exp(e0 + zscale * gj.nodes[i] - emax);
    const double logpref = (alpha + 1.0) * (std::log(w) - std::log(b));
    return std::exp(logpref + emax) * pi_alpha_constant(alpha) * sum;
}

double heat_s_rep(double alpha, const HeatKernelPoint& pt) {
    return heat_s_rep(alpha, pt.t, pt.x, pt.y);
}

double heat_dx(double alpha, const HeatKernelPoint& pt) {
    return heat_eval(alpha, pt.t, pt.x, pt.y).dw_dx;
}

double heat_dt(double alpha, const HeatKernelPoint& pt) {
    return heat_eval(alpha, pt.t, pt.x, pt.y).dw_dt;
}

GridFunction apply_heat(double alpha, const GridFunction& f, double t) {
    if (!(t > 0.0)) throw std::domain_error("apply_heat: t must be positive");
    GridFunction out = f;
    parallel_for(f.size(), [&](std::size_t i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < f.size(); ++j)
            sum += f.weights[j] * f.values[j] *
                   heat_eval(alpha, t, f.nodes[i], f.nodes[j]).w;
        out.values[i] = sum;
    });
    return out;
}

}  // namespace laglab
