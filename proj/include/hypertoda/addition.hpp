#ifndef HYPERTODA_ADDITION_HPP
#define HYPERTODA_ADDITION_HPP

#include "hypertoda/sigma.hpp"

#include <vector>

namespace hypertoda
{

using DivisorList = std::vector<CurvePoint>;

// Two-sided evaluation of an identity lhs = rhs.
struct IdentityResidual {
    Complex lhs{};
    Complex rhs{};
    double residual = 0;       // |lhs - rhs| / max(|lhs|, |rhs|, 1e-30)
    bool sign_anomaly = false; // lhs ~ -rhs
};
IdentityResidual make_residual(Complex lhs, Complex rhs);

// det[1, phi_1(P_i), ..., phi_{n-1}(P_i)]
Complex fs_det(const HyperellipticCurve &curve, const DivisorList &pts);
int epsilon_n(int g, int n);
int delta_gmn(int g, int m, int n);

IdentityResidual fs_residual(const SigmaContext &ctx, const DivisorList &pts);

// Limit of Psi_{n+1}(P, Q_1..Q_n) / Psi_n(Q_1..Q_n) as Q_i -> P_i. Repeated
// points contribute Taylor (Hermite) rows along the curve.
Complex mu_n(const HyperellipticCurve &curve, const CurvePoint &p, const DivisorList &pts);
// Coefficients c_j with mu_n(P; pts) = sum_j c_j phi_j(P), j = 0..n.
std::vector<Complex> mu_coefficients(const HyperellipticCurve &curve, const DivisorList &pts);

struct DivisorReduction {
    DivisorList q;       // extra zeros of mu_n
    DivisorList negated; // (x, -y) for each Q
};
DivisorReduction reduce_divisor(const HyperellipticCurve &curve, const DivisorList &pts);

// Xi(u, v) for u = w(P_1..P_g), v = w(P'_1) + w(P'_2).
Complex xi(const HyperellipticCurve &curve, const DivisorList &u_pts, const CurvePoint &v1, const CurvePoint &v2);

IdentityResidual thm_add_residual(const SigmaContext &ctx, const DivisorList &m_pts, const DivisorList &n_pts);
// sigma(u+v) sigma(u-v) / (sigma(u)^2 sigma_flat(v)^2) = -Xi(u, v)
IdentityResidual xi_residual(const SigmaContext &ctx, const DivisorList &u_pts, const CurvePoint &v1,
                             const CurvePoint &v2);

Complex baker_rhs(const HyperellipticCurve &curve, const DivisorList &u_pts, Complex x1p, Complex x2p);
// sum wp_ij(u) x1'^{i-1} x2'^{j-1} against baker_rhs
IdentityResidual baker_residual(const SigmaContext &ctx, const DivisorList &u_pts, Complex x1p, Complex x2p);
IdentityResidual fay_residual(const SigmaContext &ctx, const DivisorList &u_pts, const CurvePoint &v1,
                              const CurvePoint &v2);

// sigma(u+2v) sigma(u-2v) / (sigma(u)^2 sigma_flat(2v)^2) = f_{1,2}(x') - sum wp_ij x'^{i+j-2}
IdentityResidual deg1_residual(const SigmaContext &ctx, const DivisorList &u_pts, const CurvePoint &v1);
// sigma(u+v) sigma(u-v) / (sigma(u)^2 sigma_sharp(v)^2) = F(x')
IdentityResidual deg2_F_check(const SigmaContext &ctx, const DivisorList &u_pts, const CurvePoint &v1);
// x'^g - sum_j wp_{gj}(u) x'^{j-1} = F(x')
IdentityResidual jacobi_inversion_check(const SigmaContext &ctx, const DivisorList &u_pts, Complex xp);

Eigen::VectorXcd abel_sum(const HyperellipticCurve &curve, const DivisorList &pts);

} // namespace hypertoda

#endif
