#include "laglab/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "laglab/specfun.hpp"

namespace laglab {

namespace {

QuadRule make_gauss_legendre(int n) {
    // Newton iteration on P_n with the usual Chebyshev-like initial guess.
    QuadRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

// Symmetric tridiagonal QL with implicit shifts, tracking only the first
// row of the accumulated eigenvector matrix (enough for Golub-Welsch).
void tql_first_components(std::vector<double>& d, std::vector<double>& e,
                          std::vector<double>& z) {
    const int n = static_cast<int>(d.size());
    e.push_back(0.0);
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= 1e-15 * dd) break;
            }
            if (m != l) {
                if (iter++ == 80) throw std::runtime_error("tql: too many iterations");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + (g >= 0 ? std::fabs(r) : -std::fabs(r)));
                double s = 1.0, c = 1.0, p = 0.0;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    double zi = z[i], zi1 = z[i + 1];
                    z[i + 1] = s * zi + c * zi1;
                    z[i] = c * zi - s * zi1;
                }
                if (r == 0.0 && m - 1 >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    e.pop_back();
}

QuadRule make_gauss_jacobi_symmetric(int n, double beta) {
    if (!(beta > -1.0)) throw std::domain_error("gauss_jacobi_symmetric: beta must be > -1");
    // Monic Jacobi(beta,beta) recurrence: zero diagonal, off-diagonal
    // b_k^2 = k (k + 2 beta) / ((2k + 2 beta + 1)(2k + 2 beta - 1)).
    std::vector<double> d(n, 0.0), e(n - 1), z(n, 0.0);
    for (int k = 1; k < n; ++k) {
        double num = k * (k + 2.0 * beta);
        double den = (2.0 * k + 2.0 * beta + 1.0) * (2.0 * k + 2.0 * beta - 1.0);
        e[k - 1] = std::sqrt(num / den);
    }
    z[0] = 1.0;
    tql_first_components(d, e, z);

    const double mu0 =
        std::exp((2.0 * beta + 1.0) * std::log(2.0) + 2.0 * log_gamma(beta + 1.0) -
                 log_gamma(2.0 * beta + 2.0));

    QuadRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    // sort by node value
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = d[idx[i]];
        rule.weights[i] = mu0 * z[idx[i]] * z[idx[i]];
    }
    return rule;
}

std::mutex g_cache_mutex;

}  // namespace

const QuadRule& gauss_legendre(int n) {
    if (n < 1) throw std::domain_error("gauss_legendre: n must be >= 1");
    static std::map<int, QuadRule> cache;
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_gauss_legendre(n)).first;
    return it->second;
}

const QuadRule& gauss_jacobi_symmetric(int n, double beta) {
    if (n < 1) throw std::domain_error("gauss_jacobi_symmetric: n must be >= 1");
    static std::map<std::pair<int, double>, QuadRule> cache;
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto key = std::make_pair(n, beta);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, make_gauss_jacobi_symmetric(n, beta)).first;
    return it->second;
}

std::vector<double> geometric_breakpoints(double lo, double hi, double ratio) {
    if (!(lo > 0.0) || !(hi > lo) || !(ratio > 0.0 && ratio < 1.0))
        throw std::domain_error("geometric_breakpoints: need 0 < lo < hi, 0 < ratio < 1");
    std::vector<double> brk;
    double b = hi;
    while (b > lo) {
        brk.push_back(b);
        b = std::max(b * ratio, lo);
    }
    brk.push_back(lo);
    std::reverse(brk.begin(), brk.end());
    return brk;
}

}  // namespace laglab
