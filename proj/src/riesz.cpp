#include "laglab/riesz.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "laglab/heat.hpp"
#include "laglab/measure.hpp"
#include "laglab/quadrature.hpp"

namespace laglab {

RieszKernelJob::RieszKernelJob(double alpha_) : alpha(alpha_) {
    if (!(alpha > -0.5)) throw std::domain_error("RieszKernelJob: alpha must be > -1/2");
}

RieszKernelJob RieszKernelJob::strict() const {
    RieszKernelJob s = *this;
    s.points_per_panel = 12;
    s.panel_ratio = 0.75;
    s.sigma_cut = 18.0;
    s.t_far = 60.0;
    return s;
}

double riesz_kernel(const RieszKernelJob& job, double x, double y) {
    if (!(x > 0.0 && y > 0.0)) throw std::domain_error("riesz_kernel: x, y must be positive");
    if (std::fabs(x - y) < 1e-12)
        throw std::domain_error("riesz_kernel: evaluation on the diagonal");

    const QuadRule& rule = gauss_legendre(job.points_per_panel);
    const double umin = std::max(std::fabs(x - y) / job.sigma_cut, 1e-9);
    double total = 0.0;

    // u = sqrt(t) on (0,1]: dt/sqrt(t) = 2 du
    if (umin < 1.0) {
        auto g = [&](double u) { return 2.0 * heat_eval(job.alpha, u * u, x, y).dw_dx; };
        double hi = 1.0;
        while (hi > umin) {
            const double lo = std::max(hi * job.panel_ratio, umin);
            total += panel_integrate(g, lo, hi, rule);
            hi = lo;
        }
    }

    // t in (1, T] with doubling panels
    const double T = job.t_far / (job.alpha + 1.0);
    auto h = [&](double t) { return heat_eval(job.alpha, t, x, y).dw_dx / std::sqrt(t); };
    double lo = 1.0;
    while (lo < T) {
        const double hi = std::min(2.0 * lo, T);
        total += panel_integrate(h, lo, hi, rule);
        lo = hi;
    }

    return total / std::sqrt(M_PI);
}

TruncationLadder::TruncationLadder(std::vector<double> radii_, double theta_)
    : radii(std::move(radii_)), theta(theta_) {
    if (radii.empty()) throw std::domain_error("TruncationLadder: empty radii");
    if (!(theta > 1.0)) throw std::domain_error("TruncationLadder: theta must be > 1");
    for (std::size_t i = 0; i + 1 < radii.size(); ++i)
        if (!(radii[i] > radii[i + 1]) || !(radii[i + 1] > 0.0))
            throw std::domain_error("TruncationLadder: radii must be strictly decreasing");
}

TruncationLadder TruncationLadder::geometric(double r_min, double r_max, int per_decade,
                                             double theta) {
    if (!(r_min > 0.0 && r_max > r_min && per_decade > 0))
        throw std::domain_error("TruncationLadder::geometric: invalid range");
    std::vector<double> radii;
    const double step = std::pow(10.0, -1.0 / per_decade);
    for (double r = r_max; r > r_min * (1.0 - 1e-12); r *= step) radii.push_back(r);
    return TruncationLadder(std::move(radii), theta);
}

std::vector<double> TruncationLadder::capped(double cap) const {
    std::vector<double> out;
    for (double r : radii)
        if (r <= cap) out.push_back(r);
    return out;
}

template <typename V>
V ShellSums<V>::truncated(double eps) const {
    auto it = std::upper_bound(dist.begin(), dist.end(), eps);
    if (it == dist.begin()) return total;
    return total - prefix[static_cast<std::size_t>(it - dist.begin()) - 1];
}

template struct ShellSums<double>;
template struct ShellSums<std::complex<double>>;

namespace {

template <typename V, typename K>
ShellSums<V> make_shell_sums(const K& kernel, const GridFunction& f, double x) {
    ShellSums<V> s;
    const std::size_t n = f.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::fabs(f.nodes[a] - x) < std::fabs(f.nodes[b] - x);
    });
    s.dist.reserve(n);
    s.prefix.reserve(n);
    V run{};
    for (std::size_t j : order) {
        const double d = std::fabs(f.nodes[j] - x);
        if (d <= 1e-12) continue;  // diagonal node: excluded by every eps > 0
        if (f.values[j] != 0.0) run += f.weights[j] * f.values[j] * kernel(x, f.nodes[j]);
        s.dist.push_back(d);
        s.prefix.push_back(run);
    }
    s.total = run;
    return s;
}

}  // namespace

ShellSums<double> kernel_shell_sums(const std::function<double(double, double)>& kernel,
                                    const GridFunction& f, double x) {
    return make_shell_sums<double>(kernel, f, x);
}

ShellSums<std::complex<double>> kernel_shell_sums_complex(
    const std::function<std::complex<double>(double, double)>& kernel,
    const GridFunction& f, double x) {
    return make_shell_sums<std::complex<double>>(kernel, f, x);
}

double riesz_truncated(const RieszKernelJob& job, const GridFunction& f, double eps,
                       double x) {
    if (!(eps > 0.0)) throw std::domain_error("riesz_truncated: eps must be positive");
    double sum = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) {
        if (std::fabs(f.nodes[j] - x) <= eps || f.values[j] == 0.0) continue;
        sum += f.weights[j] * f.values[j] * riesz_kernel(job, x, f.nodes[j]);
    }
    return sum;
}

std::vector<double> riesz_truncated_ladder(const RieszKernelJob& job, const GridFunction& f,
                                           double x, const std::vector<double>& radii) {
    auto shells = make_shell_sums<double>(
        [&](double xx, double yy) { return riesz_kernel(job, xx, yy); }, f, x);
    std::vector<double> out(radii.size());
    for (std::size_t i = 0; i < radii.size(); ++i) out[i] = shells.truncated(radii[i]);
    return out;
}

double riesz_maximal_local(const RieszKernelJob& job, const GridFunction& f, double a,
                           double x, const TruncationLadder& ladder) {
    const std::vector<double> radii = ladder.capped(a * m_of(x));
    if (radii.empty())
        throw std::invalid_argument("riesz_maximal_local: no ladder radius below a*m(x)");
    double best = 0.0;
    for (double v : riesz_truncated_ladder(job, f, x, radii))
        best = std::max(best, std::fabs(v));
    return best;
}

bool truncation_resolved(const GridFunction& f, double x, double eps) {
    auto count = [&](double lo, double hi) {
        auto [i0, i1] = f.node_range(lo, hi);
        return i1 - i0;
    };
    return count(x - 2.0 * eps, x - eps) + count(x + eps, x + 2.0 * eps) >= 4;
}

}  // namespace laglab
