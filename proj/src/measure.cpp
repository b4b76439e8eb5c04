#include "laglab/measure.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "laglab/specfun.hpp"

namespace laglab {

MeasureParams::MeasureParams(double alpha_) : alpha(alpha_) {
    if (!(alpha > -0.5)) throw std::domain_error("MeasureParams: alpha must be > -1/2");
}

AdmissibleInterval::AdmissibleInterval(double center_, double radius_, double a_)
    : center(center_), radius(radius_), a(a_) {
    if (!(center > 0.0 && radius > 0.0 && a > 0.0))
        throw std::domain_error("AdmissibleInterval: center, radius, a must be positive");
    if (radius > center)
        throw std::domain_error("AdmissibleInterval: radius must not exceed center");
    if (radius > a * m_of(center) * (1.0 + 1e-12))
        throw std::domain_error("AdmissibleInterval: radius exceeds a*m(center)");
}

double m_of(double x) {
    if (!(x > 0.0)) throw std::domain_error("m_of: x must be positive");
    return x <= 1.0 ? 1.0 : 1.0 / x;
}

double gamma_alpha_density(const MeasureParams& p, double x) {
    return std::exp(std::log(2.0) - log_gamma(p.alpha + 1.0) - x * x +
                    (2.0 * p.alpha + 1.0) * std::log(x));
}

double gamma_alpha_mass(const MeasureParams& p, double lo, double hi) {
    if (!(lo >= 0.0) || !(hi >= lo))
        throw std::domain_error("gamma_alpha_mass: need 0 <= lo <= hi");
    const double s = p.alpha + 1.0;
    const double phi = std::isinf(hi) ? 1.0 : reg_lower_inc_gamma(s, hi * hi);
    const double plo = reg_lower_inc_gamma(s, lo * lo);
    return phi - plo;
}

double m_alpha_mass(double alpha, double x, double r) {
    const double p = 2.0 * alpha + 2.0;
    const double lo = std::max(x - r, 0.0);
    return (std::pow(x + r, p) - std::pow(lo, p)) / p;
}

double m_alpha_mass(const MeasureParams& p, double x, double r) {
    return m_alpha_mass(p.alpha, x, r);
}

bool is_admissible(double a, double x0, double r0) {
    if (!(a > 0.0 && x0 > 0.0 && r0 > 0.0))
        throw std::domain_error("is_admissible: arguments must be positive");
    return r0 <= x0 && r0 <= a * m_of(x0);
}

double doubling_ratio_sup(const MeasureParams& p, double a,
                          const std::vector<AdmissibleInterval>& sample) {
    double sup = 0.0;
    for (const auto& I : sample) {
        if (!is_admissible(a, I.center, I.radius))
            throw std::domain_error("doubling_ratio_sup: interval not admissible");
        const double lo2 = std::max(I.center - 2.0 * I.radius, 0.0);
        const double num = gamma_alpha_mass(p, lo2, I.center + 2.0 * I.radius);
        const double den = gamma_alpha_mass(p, I.lo(), I.hi());
        if (den > 0.0) sup = std::max(sup, num / den);
    }
    return sup;
}

std::vector<AdmissibleInterval> sample_admissible_intervals(double a, std::size_t count,
                                                            std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<AdmissibleInterval> out;
    out.reserve(count);
    const double lg_lo = std::log(1e-2), lg_hi = std::log(1e2);
    while (out.size() < count) {
        const double x0 = std::exp(lg_lo + (lg_hi - lg_lo) * unif(rng));
        const double rmax = std::min(x0, a * m_of(x0));
        const double r0 = rmax * std::max(unif(rng), 1e-12);
        out.emplace_back(x0, r0, a);
    }
    return out;
}

}  // namespace laglab
