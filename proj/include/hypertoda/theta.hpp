#ifndef HYPERTODA_THETA_HPP
#define HYPERTODA_THETA_HPP

#include "hypertoda/polynomial.hpp"

#include <Eigen/Dense>

#include <vector>

namespace hypertoda
{

// theta[a; b](z; T) = sum_n exp(2 pi i ((1/2)(n+a)^T T (n+a) + (n+a)^T (z+b))).
// Entries of a (top) and b (bottom) are in {0, 1/2}.
struct Characteristics {
    Eigen::VectorXd a;
    Eigen::VectorXd b;

    bool is_odd() const;
    static Characteristics zero(int g);
};

struct ThetaResult {
    Complex value{};
    double tail = 0;  // boundary-shell mass relative to the absolute sum
    double scale = 0; // sum of absolute values of the terms
};

int truncation_radius(const Eigen::MatrixXcd &T, double tol);

ThetaResult theta_char(const Characteristics &ch, const Eigen::VectorXcd &z, const Eigen::MatrixXcd &T, int R);

// Derivative with respect to z along the coordinate indices in multi_index (0-based).
ThetaResult theta_deriv(const std::vector<int> &multi_index, const Characteristics &ch, const Eigen::VectorXcd &z,
                        const Eigen::MatrixXcd &T, int R);

// All mixed directional derivatives prod_{i in S} (d_i . grad) theta for every
// subset S of the given directions, indexed by bitmask. tail is the worst over S.
struct ThetaSubsetDerivs {
    std::vector<Complex> values;
    std::vector<double> scales;
    double tail = 0;
};
ThetaSubsetDerivs theta_subset_derivs(const Characteristics &ch, const Eigen::VectorXcd &z,
                                      const Eigen::MatrixXcd &T, const std::vector<Eigen::VectorXcd> &dirs, int R);

} // namespace hypertoda

#endif
