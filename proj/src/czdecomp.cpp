#include "laglab/czdecomp.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "laglab/measure.hpp"
#include "laglab/quadrature.hpp"
#include "laglab/specfun.hpp"

namespace laglab {

RegionParams::RegionParams(double alpha_, double a_, double tau_)
    : alpha(alpha_), a(a_), tau(tau_) {
    if (!(alpha > -0.5)) throw std::domain_error("RegionParams: alpha must be > -1/2");
    if (!(a > 0.0 && tau > 0.0)) throw std::domain_error("RegionParams: a, tau must be positive");
}

CutoffSpec::CutoffSpec(int order_) : order(order_) {
    if (order != 3 && order != 5) throw std::domain_error("CutoffSpec: order must be 3 or 5");
}

bool in_region_L(const RegionParams& rp, const ProductFormulaPoint& pt) {
    const double lhs = std::sqrt(q_minus(pt.x, pt.y, pt.s));
    const double rhs = rp.a * (1.0 + rp.alpha) * rp.tau / (1.0 + pt.x + pt.y);
    return lhs <= rhs;
}

namespace {

double smoothstep(int order, double v) {
    // v in [0,1]; 0 -> 0, 1 -> 1, symmetric about 1/2
    if (v <= 0.0) return 0.0;
    if (v >= 1.0) return 1.0;
    if (order == 3) return v * v * (3.0 - 2.0 * v);
    return v * v * v * (10.0 + v * (-15.0 + 6.0 * v));
}

}  // namespace

double cutoff_phi(const CutoffSpec& cs, const RegionParams& rp, const ProductFormulaPoint& pt) {
    const double u =
        std::sqrt(q_minus(pt.x, pt.y, pt.s)) * (1.0 + pt.x + pt.y) / (rp.a * (1.0 + rp.alpha));
    if (u <= 1.0) return 1.0;
    if (u >= 2.0) return 0.0;
    return smoothstep(cs.order, 2.0 - u);
}

double global_majorant_K(double alpha, const ProductFormulaPoint& pt) {
    const double qm = q_minus(pt.x, pt.y, pt.s);
    const double qp = q_plus(pt.x, pt.y, pt.s);
    if (qm <= 0.0) throw std::domain_error("global_majorant_K: q_- vanished");
    if (pt.s < 0.0) return 1.0;
    const double loga = 0.5 * (alpha + 1.0) * (std::log(qp) - std::log(qm));
    const double expo = 0.5 * (pt.x * pt.x + pt.y * pt.y - std::sqrt(qm * qp));
    return std::exp(loga + expo);
}

double global_majorant_integral(const RegionParams& rp, double x, double y, int s_nodes) {
    const QuadRule& gj = gauss_jacobi_symmetric(s_nodes, rp.alpha - 0.5);
    const double c = pi_alpha_constant(rp.alpha);
    double sum = 0.0;
    for (std::size_t i = 0; i < gj.size(); ++i) {
        ProductFormulaPoint pt(x, y, gj.nodes[i]);
        RegionParams r1(rp.alpha, rp.a, 1.0);
        if (in_region_L(r1, pt)) continue;  // chi_{G_1}
        sum += gj.weights[i] * global_majorant_K(rp.alpha, pt);
    }
    return c * sum;
}

double local_riesz_kernel(const CutoffSpec& cs, const RegionParams& rp, double x, double y,
                          int s_nodes, int t_points) {
    if (!(x > 0.0 && y > 0.0))
        throw std::domain_error("local_riesz_kernel: x, y must be positive");
    if (std::fabs(x - y) < 1e-12)
        throw std::domain_error("local_riesz_kernel: evaluation on the diagonal");

    const double alpha = rp.alpha;
    const QuadRule& gj = gauss_jacobi_symmetric(s_nodes, alpha - 0.5);
    const QuadRule& gl = gauss_legendre(t_points);
    const double c = pi_alpha_constant(alpha);

    double outer = 0.0;
    for (std::size_t i = 0; i < gj.size(); ++i) {
        const double s = gj.nodes[i];
        ProductFormulaPoint pt(x, y, s);
        const double phi = cutoff_phi(cs, rp, pt);
        if (phi == 0.0) continue;

        // inner t-integral of
        //   e^{-t(alpha+2)} (e^{-t}x - y s) / (1-e^{-2t})^{alpha+2}
        //   * exp(-q_-(e^{-t}x, y, s)/(1-e^{-2t}) + y^2) / sqrt(t)
        // with u = sqrt(t) on (0,1] and doubling panels beyond.
        auto integrand = [&](double t) {
            const double b = -std::expm1(-2.0 * t);
            const double w = std::exp(-t);
            const double qm = q_minus(w * x, y, s);
            const double expo = -qm / b + y * y;
            const double logpre = -t * (alpha + 2.0) - (alpha + 2.0) * std::log(b) + expo;
            return (w * x - y * s) * std::exp(logpre);
        };
        const double qm0 = q_minus(x, y, s);
        const double umin = std::max(std::sqrt(qm0) / 14.0, 1e-9);
        double inner = 0.0;
        if (umin < 1.0) {
            auto g = [&](double u) { return 2.0 * integrand(u * u); };  // dt/sqrt(t) = 2 du
            double hi = 1.0;
            while (hi > umin) {
                const double lo = std::max(hi * 0.60, umin);
                inner += panel_integrate(g, lo, hi, gl);
                hi = lo;
            }
        }
        const double T = 40.0 / (alpha + 1.0);
        double lo = 1.0;
        while (lo < T) {
            const double hi = std::min(2.0 * lo, T);
            inner += panel_integrate([&](double t) { return integrand(t) / std::sqrt(t); },
                                     lo, hi, gl);
            lo = hi;
        }
        outer += gj.weights[i] * phi * inner;
    }
    return -2.0 / std::sqrt(M_PI) * c * outer;
}

std::vector<PointPair> sample_near_diagonal_pairs(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<PointPair> out;
    out.reserve(count);
    const double lx_lo = std::log(0.05), lx_hi = std::log(6.0);
    while (out.size() < count) {
        const double x = std::exp(lx_lo + (lx_hi - lx_lo) * unif(rng));
        const double mx = m_of(x);
        const double d = mx * std::pow(10.0, -3.0 * unif(rng));
        const double y = unif(rng) < 0.5 ? x - d : x + d;
        if (y <= 1e-3) continue;
        out.push_back({x, y});
    }
    return out;
}

double cz_size_ratio(const std::function<double(double, double)>& kernel, double alpha,
                     const std::vector<PointPair>& pairs) {
    double sup = 0.0;
    for (const auto& pr : pairs) {
        const double d = std::fabs(pr.x - pr.y);
        if (d <= 0.0) continue;
        sup = std::max(sup, std::fabs(kernel(pr.x, pr.y)) * m_alpha_mass(alpha, pr.x, d));
    }
    return sup;
}

double cz_gradient_ratio(const std::function<double(double, double)>& kernel, double alpha,
                         const std::vector<PointPair>& pairs, double step_frac,
                         const std::function<double(double, double)>* measure) {
    if (!(step_frac > 0.0 && step_frac < 0.05))
        throw std::domain_error("cz_gradient_ratio: step must be well below |x-y|");
    double sup = 0.0;
    for (const auto& pr : pairs) {
        const double d = std::fabs(pr.x - pr.y);
        if (d <= 0.0) continue;
        const double h = step_frac * d;
        const double gx = (kernel(pr.x + h, pr.y) - kernel(pr.x - h, pr.y)) / (2.0 * h);
        const double gy = (kernel(pr.x, pr.y + h) - kernel(pr.x, pr.y - h)) / (2.0 * h);
        const double grad = std::max(std::fabs(gx), std::fabs(gy));
        const double meas = measure ? (*measure)(pr.x, d) : m_alpha_mass(alpha, pr.x, d);
        sup = std::max(sup, grad * d * meas);
    }
    return sup;
}

}  // namespace laglab
