#ifndef HYPERTODA_ABEL_HPP
#define HYPERTODA_ABEL_HPP

#include "hypertoda/curve.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace hypertoda
{

struct AbelPoint {
    Eigen::VectorXcd u;
    std::optional<int> stratum;
};

// int_infinity^P (nu_1, ..., nu_g), nu_i = x^{i-1} dx / (2y).
// Paths run in the local parameter t = x^{-1/2} out to a fixed basepoint of
// modulus 10 * scale and continue along straight x-segments.
Eigen::VectorXcd abel_point(const HyperellipticCurve &curve, const CurvePoint &p);

AbelPoint abel_map(const HyperellipticCurve &curve, const std::vector<CurvePoint> &points);

// The fixed basepoint used for x-paths.
Complex abel_basepoint(const HyperellipticCurve &curve);

} // namespace hypertoda

#endif
