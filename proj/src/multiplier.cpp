#include "laglab/multiplier.hpp"

#include <cmath>
#include <stdexcept>

#include "laglab/heat.hpp"
#include "laglab/measure.hpp"
#include "laglab/quadrature.hpp"
#include "laglab/specfun.hpp"

namespace laglab {

LaplaceSymbol LaplaceSymbol::constant() {
    LaplaceSymbol s;
    s.name = "constant";
    s.phi = [](double) { return cplx(1.0, 0.0); };
    s.phi_prime = [](double) { return cplx(0.0, 0.0); };
    s.derivative_bound_constant = 0.0;
    return s;
}

LaplaceSymbol LaplaceSymbol::exponential() {
    LaplaceSymbol s;
    s.name = "exp";
    s.phi = [](double t) { return cplx(std::exp(-t), 0.0); };
    s.phi_prime = [](double t) { return cplx(-std::exp(-t), 0.0); };
    s.derivative_bound_constant = std::exp(-1.0);  // sup of t e^{-t}
    return s;
}

LaplaceSymbol LaplaceSymbol::rational() {
    LaplaceSymbol s;
    s.name = "rational";
    s.phi = [](double t) { return cplx(1.0 / (1.0 + t), 0.0); };
    s.phi_prime = [](double t) {
        return cplx(-1.0 / ((1.0 + t) * (1.0 + t)), 0.0);
    };
    s.derivative_bound_constant = 0.25;  // sup of t/(1+t)^2
    return s;
}

LaplaceSymbol LaplaceSymbol::imaginary_power(double eta) {
    if (eta == 0.0)
        throw std::domain_error("LaplaceSymbol::imaginary_power: eta must be nonzero");
    LaplaceSymbol s;
    s.name = "imaginary-power:" + std::to_string(eta);
    const cplx inv_gamma = 1.0 / gamma_fn(cplx(1.0, -eta));
    s.phi = [eta, inv_gamma](double t) {
        return std::exp(cplx(0.0, -eta * std::log(t))) * inv_gamma;
    };
    s.phi_prime = [eta, inv_gamma](double t) {
        return cplx(0.0, -eta) / t * std::exp(cplx(0.0, -eta * std::log(t))) * inv_gamma;
    };
    s.derivative_bound_constant = std::fabs(eta) * std::abs(inv_gamma);
    s.complex_valued = true;
    return s;
}

LaplaceSymbol LaplaceSymbol::by_name(const std::string& spec) {
    if (spec == "constant") return constant();
    if (spec == "exp") return exponential();
    if (spec == "rational") return rational();
    const std::string prefix = "imaginary-power:";
    if (spec.rfind(prefix, 0) == 0) return imaginary_power(std::stod(spec.substr(prefix.size())));
    throw std::invalid_argument("unknown Laplace symbol: " + spec);
}

double symbol_hypothesis_sup(const LaplaceSymbol& s, double t_lo, double t_hi,
                             int points_per_decade) {
    if (!s.phi_prime)
        throw std::invalid_argument("symbol_hypothesis_sup: symbol has no derivative");
    double sup = 0.0;
    const double step = std::pow(10.0, 1.0 / points_per_decade);
    for (double t = t_lo; t <= t_hi * (1.0 + 1e-12); t *= step)
        sup = std::max(sup, std::abs((*s.phi_prime)(t)) * t);
    return sup;
}

cplx symbol_M(const LaplaceSymbol& s, double x) {
    if (!(x > 0.0)) throw std::domain_error("symbol_M: x must be positive");
    const QuadRule& rule = gauss_legendre(8);
    auto f = [&](double t) { return s.phi(t) * std::exp(-x * t); };
    cplx total = 0.0;
    const double hi_t = 60.0 / x;
    for (double hi = hi_t, lo = hi_t * 0.5; hi > 1e-12 / x;
         hi = lo, lo *= 0.5) {
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        cplx sum = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i)
            sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
        total += half * sum;
    }
    return x * total;
}

MultiplierKernelJob::MultiplierKernelJob(double alpha_, LaplaceSymbol symbol_)
    : alpha(alpha_), symbol(std::move(symbol_)) {
    if (!(alpha > -0.5)) throw std::domain_error("MultiplierKernelJob: alpha must be > -1/2");
}

namespace {

// Shared t-quadrature over the two kernel forms; F(t) -> cplx.
template <typename F>
cplx kernel_t_integral(const MultiplierKernelJob& job, double x, double y, const F& f) {
    const QuadRule& rule = gauss_legendre(job.points_per_panel);
    const double umin = std::max(std::fabs(x - y) / job.sigma_cut, 1e-9);
    cplx total = 0.0;

    auto add_panel = [&](auto&& g, double lo, double hi) {
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        cplx sum = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i)
            sum += rule.weights[i] * g(mid + half * rule.nodes[i]);
        total += half * sum;
    };

    if (umin < 1.0) {
        auto g = [&](double u) { return 2.0 * u * f(u * u); };  // t = u^2
        double hi = 1.0;
        while (hi > umin) {
            const double lo = std::max(hi * job.panel_ratio, umin);
            add_panel(g, lo, hi);
            hi = lo;
        }
    }
    const double T = job.t_far / (job.alpha + 1.0);
    double lo = 1.0;
    while (lo < T) {
        const double hi = std::min(2.0 * lo, T);
        add_panel(f, lo, hi);
        lo = hi;
    }
    return total;
}

}  // namespace

DualFormValues multiplier_kernel_forms(const MultiplierKernelJob& job, double x, double y) {
    if (!(x > 0.0 && y > 0.0))
        throw std::domain_error("multiplier_kernel: x, y must be positive");
    if (std::fabs(x - y) < 1e-12)
        throw std::domain_error("multiplier_kernel: evaluation on the diagonal");

    DualFormValues out;
    out.phi_form = kernel_t_integral(job, x, y, [&](double t) {
        return -job.symbol.phi(t) * heat_eval(job.alpha, t, x, y).dw_dt;
    });
    if (job.symbol.phi_prime) {
        out.has_prime = true;
        out.phi_prime_form = kernel_t_integral(job, x, y, [&](double t) {
            return (*job.symbol.phi_prime)(t)*heat_eval(job.alpha, t, x, y).w;
        });
    }
    return out;
}

cplx multiplier_kernel(const MultiplierKernelJob& job, double x, double y) {
    if (!job.dual_form_check || !job.symbol.phi_prime) {
        if (!(x > 0.0 && y > 0.0))
            throw std::domain_error("multiplier_kernel: x, y must be positive");
        if (std::fabs(x - y) < 1e-12)
            throw std::domain_error("multiplier_kernel: evaluation on the diagonal");
        return kernel_t_integral(job, x, y, [&](double t) {
            return -job.symbol.phi(t) * heat_eval(job.alpha, t, x, y).dw_dt;
        });
    }
    DualFormValues v = multiplier_kernel_forms(job, x, y);
    const double scale = std::max({std::abs(v.phi_form), std::abs(v.phi_prime_form), 1e-300});
    if (std::abs(v.phi_form - v.phi_prime_form) > job.dual_form_tol * scale)
        throw std::runtime_error("multiplier_kernel: dual-form disagreement beyond tolerance");
    return v.phi_form;
}

cplx q_truncated(const MultiplierKernelJob& job, const GridFunction& f, double eps, double x) {
    if (!(eps > 0.0)) throw std::domain_error("q_truncated: eps must be positive");
    cplx sum = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) {
        if (std::fabs(f.nodes[j] - x) <= eps || f.values[j] == 0.0) continue;
        sum += f.weights[j] * f.values[j] * multiplier_kernel(job, x, f.nodes[j]);
    }
    return sum;
}

std::vector<cplx> q_truncated_ladder(const MultiplierKernelJob& job, const GridFunction& f,
                                     double x, const std::vector<double>& radii) {
    auto shells = kernel_shell_sums_complex(
        [&](double xx, double yy) { return multiplier_kernel(job, xx, yy); }, f, x);
    std::vector<cplx> out(radii.size());
    for (std::size_t i = 0; i < radii.size(); ++i) out[i] = shells.truncated(radii[i]);
    return out;
}

double q_maximal_local(const MultiplierKernelJob& job, const GridFunction& f, double a,
                       double x, const TruncationLadder& ladder) {
    const std::vector<double> radii = ladder.capped(a * m_of(x));
    if (radii.empty())
        throw std::invalid_argument("q_maximal_local: no ladder radius below a*m(x)");
    double best = 0.0;
    for (const cplx& v : q_truncated_ladder(job, f, x, radii))
        best = std::max(best, std::abs(v));
    return best;
}

OperatorFamily multiplier_operator_family(const MultiplierKernelJob& job) {
    return [job](const GridFunction& f, double x, const std::vector<double>& radii) {
        return q_truncated_ladder(job, f, x, radii);
    };
}

}  // namespace laglab
