#ifndef HYPERTODA_QUADRATURE_HPP
#define HYPERTODA_QUADRATURE_HPP

#include <vector>

namespace hypertoda
{

struct QuadratureRule {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights;
};

// n-point Gauss-Legendre rule; cached per n.
const QuadratureRule &gauss_legendre(int n);

struct QuadratureConfig {
    int initial_nodes = 256;
    int max_nodes = 4096;
    double tol = 1e-11;
};

} // namespace hypertoda

#endif
