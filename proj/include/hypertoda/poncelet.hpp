#ifndef HYPERTODA_PONCELET_HPP
#define HYPERTODA_PONCELET_HPP

#include "hypertoda/division.hpp"

#include <Eigen/Dense>

namespace hypertoda
{

// D: (x, y, z) A (x, y, z)^T = 0 against C: x^2 = y z, parametrized by (x, x^2, 1).
struct ConicPair {
    Eigen::Matrix3cd A;
};
// Requires a_5 = A(1, 1) == 0 exactly and det A != 0.
ConicPair make_conic_pair(const Eigen::Matrix3cd &A);

// w^2 = (x, x^2, 1) A (x, x^2, 1)^T / (a_2 + a_4), a monic cubic since a_5 = 0.
struct EllipticReduction {
    HyperellipticCurve curve;
    Complex lead{}; // a_2 + a_4
};
EllipticReduction reduce_to_elliptic(const ConicPair &pair);

// Pair whose Poncelet step is translation by u0 with wp(u0) = xstar on y^2 = x^3 + a x + b.
ConicPair constructed_pair(Complex a, Complex b, Complex xstar);

// Zeros of psi_N on the reduced curve (branch points dropped).
std::vector<TorsionCandidate> cayley_closure_check(const ConicPair &pair, int N);

// Vertices (x_n, x_n^2, 1), x_n = wp((n-1) u0 + t), n = 1..count, u0 = w(p).
std::vector<Eigen::Vector3cd> poncelet_vertices(const SigmaContext &ctx, const CurvePoint &p, int count, Complex t);

// max_n |x_{n+N} - x_n| for n = 1..N
double closure_residual(const SigmaContext &ctx, const CurvePoint &p, int N, Complex t);

// Max over consecutive vertices of |L A^{-1} L^T| for the side L through them, normalized.
double tangency_residual(const ConicPair &pair, const std::vector<Eigen::Vector3cd> &vertices);

// -d^2/dt^2 log(wp(n u0 + t) - wp(u0)) against the second difference in n.
TodaResidual poncelet_toda_residual(const SigmaContext &ctx, const CurvePoint &p, int n, Complex t,
                                    double fd_step = 0);

} // namespace hypertoda

#endif
