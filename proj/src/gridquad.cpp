#include "laglab/gridquad.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "laglab/quadrature.hpp"

namespace laglab {

void QuadratureSpec::validate() const {
    if (geometric_levels < 1 || panels_per_octave < 1 || points_geometric < 2 ||
        panels_per_unit <= 0.0 || points_uniform < 2 || x_max <= 1.0 || refine_tol <= 0.0)
        throw std::domain_error("QuadratureSpec: invalid parameters");
}

QuadratureSpec QuadratureSpec::refined(int levels) const {
    QuadratureSpec r = *this;
    for (int i = 0; i < levels; ++i) {
        r.panels_per_octave *= 2;
        r.panels_per_unit *= 2.0;
    }
    return r;
}

GridFunction build_grid(const MeasureParams& p, const QuadratureSpec& q) {
    q.validate();

    std::vector<double> brk;
    const double ratio = std::pow(0.5, 1.0 / q.panels_per_octave);
    double b = 1.0;
    for (int j = 0; j < q.geometric_levels * q.panels_per_octave; ++j) {
        brk.push_back(b);
        b *= ratio;
    }
    brk.push_back(b);
    const double width = 1.0 / q.panels_per_unit;
    for (double x = 1.0 + width; x < q.x_max - 1e-12; x += width) brk.push_back(x);
    brk.push_back(q.x_max);
    for (double e : q.extra_breakpoints)
        if (e > b && e < q.x_max) brk.push_back(e);
    std::sort(brk.begin(), brk.end());
    brk.erase(std::unique(brk.begin(), brk.end(),
                          [](double u, double v) { return std::fabs(u - v) < 1e-14; }),
              brk.end());

    GridFunction g;
    for (std::size_t i = 0; i + 1 < brk.size(); ++i) {
        const double lo = brk[i], hi = brk[i + 1];
        const QuadRule& rule =
            gauss_legendre(hi <= 1.0 + 1e-12 ? q.points_geometric : q.points_uniform);
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        for (std::size_t k = 0; k < rule.size(); ++k) {
            const double x = mid + half * rule.nodes[k];
            g.nodes.push_back(x);
            g.weights.push_back(half * rule.weights[k] * gamma_alpha_density(p, x));
        }
    }
    g.values.assign(g.nodes.size(), 0.0);
    return g;
}

GridFunction sample(const GridFunction& g, const std::function<double(double)>& f) {
    GridFunction out = g;
    for (std::size_t i = 0; i < out.size(); ++i) out.values[i] = f(out.nodes[i]);
    return out;
}

std::pair<std::size_t, std::size_t> GridFunction::node_range(double lo, double hi) const {
    auto first = std::upper_bound(nodes.begin(), nodes.end(), lo);
    auto last = std::lower_bound(nodes.begin(), nodes.end(), hi);
    return {static_cast<std::size_t>(first - nodes.begin()),
            static_cast<std::size_t>(last - nodes.begin())};
}

double integrate(const GridFunction& f) {
    double sum = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) sum += f.weights[i] * f.values[i];
    return sum;
}

double integrate_abs(const GridFunction& f) {
    double sum = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) sum += f.weights[i] * std::fabs(f.values[i]);
    return sum;
}

double norm_l2(const GridFunction& f) {
    double sum = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        sum += f.weights[i] * f.values[i] * f.values[i];
    return std::sqrt(sum);
}

namespace {

std::pair<std::size_t, std::size_t> resolved_range(const GridFunction& f,
                                                   const AdmissibleInterval& I) {
    auto [i0, i1] = f.node_range(I.lo(), I.hi());
    if (i1 < i0 + 8)
        throw ResolutionError("interval holds fewer than 8 grid nodes");
    return {i0, i1};
}

}  // namespace

double interval_average(const GridFunction& f, const AdmissibleInterval& I) {
    auto [i0, i1] = resolved_range(f, I);
    double wsum = 0.0, vsum = 0.0;
    for (std::size_t i = i0; i < i1; ++i) {
        wsum += f.weights[i];
        vsum += f.weights[i] * f.values[i];
    }
    if (wsum <= 0.0) throw ResolutionError("interval carries no quadrature mass");
    return vsum / wsum;
}

double interval_essinf(const GridFunction& f, const AdmissibleInterval& I) {
    auto [i0, i1] = resolved_range(f, I);
    double m = f.values[i0];
    for (std::size_t i = i0 + 1; i < i1; ++i) m = std::min(m, f.values[i]);
    return m;
}

void to_csv(const GridFunction& f, std::ostream& os) {
    os << "node,value,weight\n";
    char buf[128];
    for (std::size_t i = 0; i < f.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", f.nodes[i], f.values[i],
                      f.weights[i]);
        os << buf;
    }
}

}  // namespace laglab
