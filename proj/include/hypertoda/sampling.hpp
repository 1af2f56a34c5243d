#ifndef HYPERTODA_SAMPLING_HPP
#define HYPERTODA_SAMPLING_HPP

#include "hypertoda/curve.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace hypertoda
{

// Deterministic sampler of affine curve points: x uniform in the annulus
// 0.2 scale <= |x| <= 1.5 scale at distance >= 0.1 scale from every branch
// point, sheet chosen by a fair coin.
class PointSampler
{
public:
    explicit PointSampler(std::uint64_t seed) : m_rng(seed)
    {
    }

    CurvePoint point(const HyperellipticCurve &curve, double min_branch_dist = 0.1);
    // n points with pairwise distinct x (separated by min_sep * scale).
    std::vector<CurvePoint> points(const HyperellipticCurve &curve, int n, double min_sep = 0.05);
    double uniform(double a, double b);

    std::mt19937_64 &engine() noexcept
    {
        return m_rng;
    }

private:
    std::mt19937_64 m_rng;
};

} // namespace hypertoda

#endif
