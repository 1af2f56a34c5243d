#include "hypertoda/theta.hpp"

#include "hypertoda/error.hpp"

#include <cmath>
#include <numbers>

namespace hypertoda
{

using std::numbers::pi;

bool Characteristics::is_odd() const
{
    const double s = 4.0 * a.dot(b);
    return static_cast<long>(std::lround(s)) % 2 != 0;
}

Characteristics Characteristics::zero(int g)
{
    return {Eigen::VectorXd::Zero(g), Eigen::VectorXd::Zero(g)};
}

int truncation_radius(const Eigen::MatrixXcd &T, double tol)
{
    const Eigen::MatrixXd Y = T.imag();
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (Y + Y.transpose()));
    const double lmin = es.eigenvalues().minCoeff();
    if (!(lmin > 0)) {
        throw Error(ErrorCode::InvalidArgument, "imaginary part of the Riemann matrix is not positive definite");
    }
    return static_cast<int>(std::ceil(std::sqrt(-std::log(tol) / (pi * lmin)))) + 2;
}

ThetaSubsetDerivs theta_subset_derivs(const Characteristics &ch, const Eigen::VectorXcd &z,
                                      const Eigen::MatrixXcd &T, const std::vector<Eigen::VectorXcd> &dirs, int R)
{
    const int g = static_cast<int>(z.size());
    const int k = static_cast<int>(dirs.size());
    const int nsub = 1 << k;
    const Eigen::MatrixXd Y = T.imag();
    const Eigen::VectorXd centre = -Y.ldlt().solve(z.imag()) - ch.a;
    Eigen::VectorXi c0(g);
    for (int i = 0; i < g; ++i) {
        c0[i] = static_cast<int>(std::lround(centre[i]));
    }
    const Complex two_pi_i(0, 2 * pi);
    const Eigen::VectorXcd zb = z + ch.b.cast<Complex>();

    std::vector<Complex> sum(nsub);
    std::vector<double> abs_sum(nsub), shell(nsub);
    std::vector<Complex> prod(nsub);
    Eigen::VectorXi off = Eigen::VectorXi::Constant(g, -R);
    const long total = static_cast<long>(std::pow(2 * R + 1, g));
    for (long idx = 0; idx < total; ++idx) {
        const Eigen::VectorXd na = (c0 + off).cast<double>() + ch.a;
        const Eigen::VectorXcd nac = na.cast<Complex>();
        const Complex expo = two_pi_i * (0.5 * nac.dot(T * nac) + nac.dot(zb));
        const Complex term = std::exp(expo);
        const bool on_shell = off.cwiseAbs().maxCoeff() == R;
        prod[0] = term;
        for (int i = 0; i < k; ++i) {
            const Complex fi = two_pi_i * nac.dot(dirs[i]);
            const int base = 1 << i;
            for (int m = 0; m < base; ++m) {
                prod[base + m] = prod[m] * fi;
            }
        }
        for (int m = 0; m < nsub; ++m) {
            sum[m] += prod[m];
            const double a = std::abs(prod[m]);
            abs_sum[m] += a;
            if (on_shell) {
                shell[m] += a;
            }
        }
        for (int i = 0; i < g; ++i) {
            if (++off[i] <= R) {
                break;
            }
            off[i] = -R;
        }
    }
    ThetaSubsetDerivs out;
    out.values = std::move(sum);
    out.scales = abs_sum;
    for (int m = 0; m < nsub; ++m) {
        if (abs_sum[m] > 0) {
            out.tail = std::max(out.tail, shell[m] / abs_sum[m]);
        }
    }
    return out;
}

ThetaResult theta_char(const Characteristics &ch, const Eigen::VectorXcd &z, const Eigen::MatrixXcd &T, int R)
{
    const auto d = theta_subset_derivs(ch, z, T, {}, R);
    return {d.values[0], d.tail, d.scales[0]};
}

ThetaResult theta_deriv(const std::vector<int> &multi_index, const Characteristics &ch, const Eigen::VectorXcd &z,
                        const Eigen::MatrixXcd &T, int R)
{
    const int g = static_cast<int>(z.size());
    std::vector<Eigen::VectorXcd> dirs;
    for (const int i : multi_index) {
        if (i < 0 || i >= g) {
            throw Error(ErrorCode::InvalidArgument, "theta derivative index out of range");
        }
        dirs.push_back(Eigen::VectorXcd::Unit(g, i));
    }
    const auto d = theta_subset_derivs(ch, z, T, dirs, R);
    return {d.values.back(), d.tail, d.scales.back()};
}

} // namespace hypertoda
