#ifndef HYPERTODA_PERIODS_HPP
#define HYPERTODA_PERIODS_HPP

#include "hypertoda/curve.hpp"
#include "hypertoda/quadrature.hpp"

#include <Eigen/Dense>

#include <utility>
#include <vector>

namespace hypertoda
{

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::MatrixXi;
using Eigen::VectorXcd;
using Eigen::VectorXd;

// Homology basis built from the chain cycles gamma_k, each a small loop around
// the segment [e_k, e_{k+1}] of consecutive (sorted) branch points. alpha and
// beta are integer combinations of the chain cycles.
struct CycleBasis {
    std::vector<Complex> branch;
    std::vector<std::pair<int, int>> segments;
    // Columns are coefficient vectors over the chain cycles (2g x g each).
    MatrixXi alpha;
    MatrixXi beta;
    // Intersection numbers of the chain cycles (2g x 2g, antisymmetric).
    MatrixXi chain_intersection;
};

struct PeriodData {
    MatrixXcd omega1; // omega'
    MatrixXcd omega2; // omega''
    MatrixXcd eta1;   // eta'
    MatrixXcd eta2;   // eta''
    MatrixXcd riemann;
    double legendre_residual = 0;
    double error_estimate = 0;

    int genus() const noexcept
    {
        return static_cast<int>(omega1.rows());
    }
};

struct PeriodConfig {
    QuadratureConfig quad{};
    double certificate_tol = 1e-8;
};

// x^{i-1} / (2y)
Complex first_kind_diff(const HyperellipticCurve &curve, int i, const CurvePoint &p);
// (1/2y) sum_{k=j}^{2g-j} (k+1-j) lambda_{k+1+j} x^k
Complex second_kind_diff(const HyperellipticCurve &curve, int j, const CurvePoint &p);
// Polynomial numerators of the second-kind differentials (without the 1/2y).
std::vector<ComplexPolynomial> second_kind_numerators(const HyperellipticCurve &curve);

CycleBasis build_cycles(const HyperellipticCurve &curve, const QuadratureConfig &quad = {});

PeriodData compute_periods(const HyperellipticCurve &curve, const CycleBasis &cycles,
                           const PeriodConfig &cfg = {});
PeriodData compute_periods(const HyperellipticCurve &curve, const PeriodConfig &cfg = {});

double legendre_residual(const PeriodData &pd);

// Real coordinates r (length 2g) with u = 2 omega' r[0:g] + 2 omega'' r[g:2g].
VectorXd lattice_coordinates(const PeriodData &pd, const VectorXcd &u);
// 2 omega' m' + 2 omega'' m''
VectorXcd lattice_vector(const PeriodData &pd, const Eigen::VectorXi &m);

struct LatticeReduction {
    VectorXcd reduced; // u minus the nearest lattice vector
    Eigen::VectorXi shift;
    double residual = 0; // |reduced| relative to max|2 omega|
};
LatticeReduction reduce_to_fundamental(const PeriodData &pd, const VectorXcd &u);

} // namespace hypertoda

#endif
