#ifndef HYPERTODA_SIGMA_HPP
#define HYPERTODA_SIGMA_HPP

#include "hypertoda/abel.hpp"
#include "hypertoda/periods.hpp"
#include "hypertoda/theta.hpp"

#include <memory>
#include <vector>

namespace hypertoda
{

struct SigmaContext {
    std::shared_ptr<const HyperellipticCurve> curve;
    PeriodData periods;
    Characteristics delta; // a = delta'', b = delta'
    Complex gamma0{1.0};
    int trunc_radius = 0;
    double tol = 1e-14;
    Eigen::MatrixXcd gauss; // eta' omega'^{-1}, symmetrized
    Eigen::MatrixXcd half_inv_omega; // (1/2) omega'^{-1}

    int genus() const noexcept
    {
        return periods.genus();
    }
};

struct SigmaConfig {
    PeriodConfig periods{};
    double theta_tol = 1e-14;
    // |theta| / sum|terms| below this marks a vanishing candidate.
    double vanish_tol = 1e-9;
};

// Periods, characteristics and gamma0 in one go.
SigmaContext make_sigma_context(const HyperellipticCurve &curve, const SigmaConfig &cfg = {});

// Context with gamma0 = 1 and the given characteristics (no normalization).
SigmaContext make_raw_context(const HyperellipticCurve &curve, const PeriodData &pd, const Characteristics &ch,
                              double theta_tol = 1e-14);

Characteristics riemann_characteristics(const HyperellipticCurve &curve, const PeriodData &pd,
                                        const SigmaConfig &cfg = {});
Complex normalize_gamma0(const SigmaContext &raw);

Complex sigma(const SigmaContext &ctx, const Eigen::VectorXcd &u);

// All mixed directional derivatives of sigma along the given directions, one
// per subset (bitmask) of the directions.
std::vector<Complex> sigma_partials(const SigmaContext &ctx, const Eigen::VectorXcd &u,
                                    const std::vector<Eigen::VectorXcd> &dirs);
// Derivative of sigma along every direction in dirs (the full subset).
Complex sigma_derivative(const SigmaContext &ctx, const Eigen::VectorXcd &u,
                         const std::vector<Eigen::VectorXcd> &dirs);
// Coordinate partial derivative; indices are 1-based as in u = (u_1, ..., u_g).
Complex sigma_partial(const SigmaContext &ctx, const Eigen::VectorXcd &u, const std::vector<int> &indices);

// 1-based indices {n+1, n+3, ...} not exceeding g; empty for n >= g.
std::vector<int> natural_index_set(int g, int n);
Complex sigma_natural(const SigmaContext &ctx, int n, const Eigen::VectorXcd &u);
// Derivatives of sigma_natural(n) along extra directions, per subset of extra.
std::vector<Complex> sigma_natural_partials(const SigmaContext &ctx, int n, const Eigen::VectorXcd &u,
                                            const std::vector<Eigen::VectorXcd> &extra);
inline Complex sigma_sharp(const SigmaContext &ctx, const Eigen::VectorXcd &u)
{
    return sigma_natural(ctx, 1, u);
}
inline Complex sigma_flat(const SigmaContext &ctx, const Eigen::VectorXcd &u)
{
    return sigma_natural(ctx, 2, u);
}

// Kleinian functions, 1-based indices. Throw ThetaDivisorPole near sigma = 0.
Complex wp(const SigmaContext &ctx, int i, int j, const Eigen::VectorXcd &u);
Complex zeta(const SigmaContext &ctx, int i, const Eigen::VectorXcd &u);
Eigen::MatrixXcd wp_matrix(const SigmaContext &ctx, const Eigen::VectorXcd &u);
Eigen::VectorXcd zeta_vector(const SigmaContext &ctx, const Eigen::VectorXcd &u);

struct TranslationFactors {
    int chi = 1;
    Complex L{};
};
// chi(l) and L(u + l/2, l) for the lattice vector l = 2 omega' m' + 2 omega'' m''.
TranslationFactors translation_factors(const SigmaContext &ctx, const Eigen::VectorXi &m, const Eigen::VectorXcd &u);
// L(u, v) = -u^T (2 eta' v' + 2 eta'' v'') with v = 2 omega' v' + 2 omega'' v''.
// sigma(u + l) = chi(l) sigma(u) exp L(u + l/2, l).
Complex L_form(const SigmaContext &ctx, const Eigen::VectorXcd &u, const Eigen::VectorXcd &v);

// Convenience: Abel image of a single point.
inline Eigen::VectorXcd abel(const SigmaContext &ctx, const CurvePoint &p)
{
    return abel_point(*ctx.curve, p);
}

} // namespace hypertoda

#endif
