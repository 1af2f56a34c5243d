#include "hypertoda/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace hypertoda
{

namespace
{

QuadratureRule build_gauss_legendre(int n)
{
    QuadratureRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) {
                p0 = 1;
                p1 = x;
            }
            dp = n * (x * p1 - p0) / (x * x - 1);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1 - x * x) * dp * dp);
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
    }
    return r;
}

} // namespace

const QuadratureRule &gauss_legendre(int n)
{
    static std::mutex mtx;
    static std::map<int, QuadratureRule> cache;
    std::lock_guard lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, build_gauss_legendre(n)).first;
    }
    return it->second;
}

} // namespace hypertoda
