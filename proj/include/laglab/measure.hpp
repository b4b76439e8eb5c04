#pragma once

#include <cstdint>
#include <vector>

// The probability measure gamma_alpha with density
// (2/Gamma(alpha+1)) e^{-x^2} x^{2 alpha + 1} on (0, inf), the reference
// doubling measure m_alpha with density x^{2 alpha + 1}, the admissibility
// scale m(x) = min(1, 1/x), admissible intervals, and doubling diagnostics.

namespace laglab {

struct MeasureParams {
    double alpha;  // > -1/2

    explicit MeasureParams(double alpha_);
};

// Interval (x0 - r0, x0 + r0) with 0 < r0 <= x0 and r0 <= a m(x0).
struct AdmissibleInterval {
    double center;
    double radius;
    double a;

    AdmissibleInterval(double center_, double radius_, double a_);

    double lo() const { return center - radius; }
    double hi() const { return center + radius; }
    bool contains(double x) const { return x > lo() && x < hi(); }
};

// m(x) = min(1, 1/x); domain error for x <= 0.
double m_of(double x);

// gamma_alpha density at x > 0.
double gamma_alpha_density(const MeasureParams& p, double x);

// gamma_alpha((lo,hi)) via the regularized incomplete gamma (u = x^2
// substitution). hi may be +inf.
double gamma_alpha_mass(const MeasureParams& p, double lo, double hi);

// m_alpha(I(x,r)) with I(x,r) = (x-r, x+r) truncated at 0.
double m_alpha_mass(const MeasureParams& p, double x, double r);
double m_alpha_mass(double alpha, double x, double r);

// r0 <= x0 and r0 <= a m(x0).
bool is_admissible(double a, double x0, double r0);

// max over the sample of gamma_alpha(I(x0, 2 r0)) / gamma_alpha(I(x0, r0)).
double doubling_ratio_sup(const MeasureParams& p, double a,
                          const std::vector<AdmissibleInterval>& sample);

// Random admissible intervals: centers log-uniform on [1e-2, 1e2], radii
// uniform on (0, min(x0, a m(x0))].
std::vector<AdmissibleInterval> sample_admissible_intervals(double a, std::size_t count,
                                                            std::uint64_t seed);

}  // namespace laglab
