#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <utility>
#include <vector>

#include "laglab/measure.hpp"

// Discrete carrier for functions on (0, X_max]: composite Gauss-Legendre
// nodes with gamma_alpha quadrature weights, graded geometrically toward 0
// and uniform above 1. Interval statistics (average, nodal essential
// infimum) run over node ranges.

namespace laglab {

// Raised when an interval holds too few grid nodes for a meaningful
// average / infimum.
struct ResolutionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadratureSpec {
    int geometric_levels = 34;     // dyadic panels below 1: [2^-j, 2^-j+1]
    int panels_per_octave = 1;     // subdivision of each dyadic level
    int points_geometric = 8;      // GL points per geometric panel
    double panels_per_unit = 4.0;  // uniform panels on [1, x_max]
    int points_uniform = 6;        // GL points per uniform panel
    double x_max = 8.0;            // domain cutoff; gamma tail < 1e-12
    double refine_tol = 1e-8;

    // Extra panel breakpoints (e.g. truncation radii around an evaluation
    // point) merged into the partition.
    std::vector<double> extra_breakpoints;

    void validate() const;

    // Density-doubled copy (panel count doubles in both regions).
    QuadratureSpec refined(int levels = 1) const;
};

struct GridFunction {
    std::vector<double> nodes;    // strictly increasing, in (0, x_max]
    std::vector<double> values;   // sample values
    std::vector<double> weights;  // gamma_alpha quadrature weights

    std::size_t size() const { return nodes.size(); }

    // Index range [first, last) of nodes inside the open interval (lo, hi).
    std::pair<std::size_t, std::size_t> node_range(double lo, double hi) const;
};

// Builds the node/weight skeleton (values zeroed).
GridFunction build_grid(const MeasureParams& p, const QuadratureSpec& q);

// Copies the skeleton of g and fills values with f(node).
GridFunction sample(const GridFunction& g, const std::function<double(double)>& f);

// sum_i w_i v_i.
double integrate(const GridFunction& f);
double integrate_abs(const GridFunction& f);

// L^2(gamma_alpha) norm of the nodal values.
double norm_l2(const GridFunction& f);

// Gamma-average of f over I; ResolutionError if fewer than 8 nodes fall
// in I.
double interval_average(const GridFunction& f, const AdmissibleInterval& I);

// Nodal minimum over I (grid proxy for the essential infimum).
double interval_essinf(const GridFunction& f, const AdmissibleInterval& I);

// CSV with header "node,value,weight" (RFC 4180).
void to_csv(const GridFunction& f, std::ostream& os);

}  // namespace laglab
