#include "hypertoda/sampling.hpp"

#include <numbers>

namespace hypertoda
{

double PointSampler::uniform(double a, double b)
{
    return std::uniform_real_distribution<double>(a, b)(m_rng);
}

CurvePoint PointSampler::point(const HyperellipticCurve &curve, double min_branch_dist)
{
    const double s = curve.scale();
    for (;;) {
        const double r = uniform(0.2 * s, 1.5 * s);
        const double phi = uniform(0.0, 2.0 * std::numbers::pi);
        const int sheet = std::bernoulli_distribution(0.5)(m_rng) ? 1 : -1;
        const Complex x = std::polar(r, phi);
        if (curve.distance_to_branch(x) >= min_branch_dist * s) {
            return curve.lift(x, sheet);
        }
    }
}

std::vector<CurvePoint> PointSampler::points(const HyperellipticCurve &curve, int n, double min_sep)
{
    std::vector<CurvePoint> out;
    while (static_cast<int>(out.size()) < n) {
        const auto p = point(curve);
        bool ok = true;
        for (const auto &q : out) {
            if (std::abs(p.x - q.x) < min_sep * curve.scale()) {
                ok = false;
            }
        }
        if (ok) {
            out.push_back(p);
        }
    }
    return out;
}

} // namespace hypertoda
