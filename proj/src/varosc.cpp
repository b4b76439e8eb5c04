#include "laglab/varosc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "laglab/measure.hpp"

namespace laglab {

ValueLadder::ValueLadder(std::vector<double> radii_, std::vector<cplx> values_)
    : radii(std::move(radii_)), values(std::move(values_)) {
    if (radii.size() != values.size())
        throw std::domain_error("ValueLadder: radii/values size mismatch");
    for (std::size_t i = 0; i + 1 < radii.size(); ++i)
        if (!(radii[i] > radii[i + 1]))
            throw std::domain_error("ValueLadder: radii must be strictly decreasing");
}

ValueLadder::ValueLadder(std::vector<double> radii_, const std::vector<double>& real_values)
    : ValueLadder(std::move(radii_), std::vector<cplx>(real_values.begin(), real_values.end())) {}

double rho_variation(const ValueLadder& v, double rho) {
    if (!(rho > 1.0)) throw std::domain_error("rho_variation: rho must be > 1");
    if (v.size() < 2) return 0.0;
    const std::size_t n = v.size();
    std::vector<double> best(n, 0.0);
    double top = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        double b = 0.0;
        for (std::size_t j = 0; j < i; ++j)
            b = std::max(b, best[j] + std::pow(std::abs(v.values[i] - v.values[j]), rho));
        best[i] = b;
        top = std::max(top, b);
    }
    return std::pow(top, 1.0 / rho);
}

double brute_force_variation(const ValueLadder& v, double rho) {
    if (!(rho > 1.0)) throw std::domain_error("brute_force_variation: rho must be > 1");
    const std::size_t n = v.size();
    if (n > 14) throw std::domain_error("brute_force_variation: ladder longer than 14");
    if (n < 2) return 0.0;
    double top = 0.0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        double sum = 0.0;
        bool have_prev = false;
        cplx prev;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) continue;
            if (have_prev) sum += std::pow(std::abs(v.values[i] - prev), rho);
            prev = v.values[i];
            have_prev = true;
        }
        top = std::max(top, sum);
    }
    return std::pow(top, 1.0 / rho);
}

double oscillation(const ValueLadder& v, const std::vector<double>& blocks) {
    if (blocks.size() < 2) throw std::domain_error("oscillation: need at least one block");
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i)
        if (!(blocks[i] < blocks[i + 1]))
            throw std::domain_error("oscillation: blocks must be increasing");
    for (double r : v.radii)
        if (r < blocks.front() || r >= blocks.back())
            throw std::domain_error("oscillation: blocks do not cover the ladder radii");

    double sq = 0.0;
    for (std::size_t b = 0; b + 1 < blocks.size(); ++b) {
        double sup = 0.0;
        // ladder radii are descending; gather values with radius in
        // [blocks[b], blocks[b+1])
        std::vector<cplx> vals;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v.radii[i] >= blocks[b] && v.radii[i] < blocks[b + 1])
                vals.push_back(v.values[i]);
        for (std::size_t i = 0; i < vals.size(); ++i)
            for (std::size_t j = i + 1; j < vals.size(); ++j)
                sup = std::max(sup, std::abs(vals[i] - vals[j]));
        sq += sup * sup;
    }
    return std::sqrt(sq);
}

std::vector<double> lacunary_blocks(double theta, double lo, double hi) {
    if (!(theta > 1.0)) throw std::domain_error("lacunary_blocks: theta must be > 1");
    if (!(lo > 0.0 && hi > lo)) throw std::domain_error("lacunary_blocks: need 0 < lo < hi");
    const int jlo = static_cast<int>(std::floor(std::log(lo) / std::log(theta))) - 1;
    const int jhi = static_cast<int>(std::ceil(std::log(hi) / std::log(theta))) + 1;
    std::vector<double> blocks;
    for (int j = jlo; j <= jhi; ++j) blocks.push_back(std::pow(theta, j));
    return blocks;
}

OperatorFamily riesz_operator_family(const RieszKernelJob& job) {
    return [job](const GridFunction& f, double x, const std::vector<double>& radii) {
        std::vector<double> real = riesz_truncated_ladder(job, f, x, radii);
        return std::vector<cplx>(real.begin(), real.end());
    };
}

namespace {

ValueLadder local_ladder(const GridFunction& f, const OperatorFamily& T, double a, double x,
                         const TruncationLadder& ladder) {
    std::vector<double> radii = ladder.capped(a * m_of(x));
    if (radii.empty()) return ValueLadder{};
    std::vector<cplx> values = T(f, x, radii);
    return ValueLadder(std::move(radii), std::move(values));
}

}  // namespace

double local_variation_op(const GridFunction& f, const OperatorFamily& T, double rho,
                          double a, double x, const TruncationLadder& ladder) {
    ValueLadder v = local_ladder(f, T, a, x, ladder);
    return v.size() < 2 ? 0.0 : rho_variation(v, rho);
}

double local_oscillation_op(const GridFunction& f, const OperatorFamily& T, double theta,
                            double a, double x, const TruncationLadder& ladder) {
    ValueLadder v = local_ladder(f, T, a, x, ladder);
    if (v.size() < 2) return 0.0;
    // blocks theta^j intersected with (0, a m(x)]: keep blocks starting at
    // or below the cap
    const double cap = a * m_of(x);
    std::vector<double> blocks = lacunary_blocks(theta, v.radii.back(), v.radii.front());
    while (blocks.size() >= 2 && blocks[blocks.size() - 2] > cap) blocks.pop_back();
    double sq = 0.0;
    for (std::size_t b = 0; b + 1 < blocks.size(); ++b) {
        if (blocks[b] > cap) continue;
        double sup = 0.0;
        std::vector<cplx> vals;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v.radii[i] >= blocks[b] && v.radii[i] < blocks[b + 1])
                vals.push_back(v.values[i]);
        for (std::size_t i = 0; i < vals.size(); ++i)
            for (std::size_t j = i + 1; j < vals.size(); ++j)
                sup = std::max(sup, std::abs(vals[i] - vals[j]));
        sq += sup * sup;
    }
    return std::sqrt(sq);
}

}  // namespace laglab
