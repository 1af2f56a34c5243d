#ifndef HYPERTODA_TODA_HPP
#define HYPERTODA_TODA_HPP

#include "hypertoda/addition.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

namespace hypertoda
{

// (1, x', ..., x'^{g-1}): coefficient vector of D = sum x'^{i-1} d/du_i.
Eigen::VectorXcd d_vector(int g, Complex xp);

// Lattice sites u_n(t) = base + n c + t d with c = 2 w(v1) and d = d_vector(x'_1).
struct TodaFrame {
    std::shared_ptr<const SigmaContext> ctx;
    CurvePoint v1;
    Eigen::VectorXcd v1u;
    Eigen::VectorXcd c;
    Eigen::VectorXcd d;
    Eigen::VectorXcd base;

    Eigen::VectorXcd site(int n, Complex t) const
    {
        return base + static_cast<double>(n) * c + t * d;
    }
    Complex xp() const noexcept
    {
        return v1.x;
    }
};

TodaFrame make_frame(std::shared_ptr<const SigmaContext> ctx, const CurvePoint &v1, const Eigen::VectorXcd &base);

// Scalar time along d (Hermitian projection) and the transverse remainder.
struct TimeSplit {
    Complex t{};
    Eigen::VectorXcd t_perp;
};
TimeSplit split_time(const TodaFrame &frame, const Eigen::VectorXcd &u_minus_nc);

enum class FdMode { Plain, Richardson };

// Derivative of h along d in the scalar parameter (order 1 or 2), by central differences.
Complex directional_derivative(const std::function<Complex(const Eigen::VectorXcd &)> &h, const Eigen::VectorXcd &u,
                               const Eigen::VectorXcd &d, int order, double step, FdMode mode = FdMode::Richardson);
// Exact D log sigma (one direction) or D D' log sigma (two directions) from termwise theta derivatives.
Complex log_sigma_derivative(const SigmaContext &ctx, const Eigen::VectorXcd &u,
                             const std::vector<Eigen::VectorXcd> &dirs);

Complex V(const TodaFrame &frame, const Eigen::VectorXcd &u);
Complex V_c(const TodaFrame &frame);
// sum wp_ij x1'^{i-1} x2'^{j-1}
Complex V_hat(const SigmaContext &ctx, const Eigen::VectorXcd &u, Complex x1p, Complex x2p);
Complex V_hat_c(const HyperellipticCurve &curve, const CurvePoint &v1, const CurvePoint &v2);

struct TodaResidual {
    Complex lhs{};
    Complex rhs{};
    double residual = 0;
};

// -D^2 log(V(u_n) - V_c) against V(u_{n+1}) - 2 V(u_n) + V(u_{n-1}).
TodaResidual toda_residual_1d(const TodaFrame &frame, int n, Complex t, double fd_step = 0,
                              FdMode mode = FdMode::Richardson);

struct HirotaResidual {
    double residual = 0;         // sigma D~^2 sigma - (D~ sigma)^2 + sigma_flat(c)^2 V_c sigma^2 - sigma(+)sigma(-)
    double printed_residual = 0; // same with -V_c sigma^2 in place of the third term
};
HirotaResidual hirota_residual(const TodaFrame &frame, int n, Complex t);

struct Toda2dResidual {
    double residual = 0;         // with log(V^ + V^_c)
    double printed_residual = 0; // with log(V^ - V^_c)
};
// Sites base + n (v1 + v2) + t1 d1 + t2 d2.
Toda2dResidual toda2d_residual(const SigmaContext &ctx, const CurvePoint &v1, const CurvePoint &v2,
                               const Eigen::VectorXcd &base, int n, Complex t1, Complex t2, double fd_step = 0);

struct Flaschka {
    Complex a{};        // sigma(u_{n+1}) sigma(u_{n-1}) / (sigma(u_n)^2 sigma_flat(c)^2)
    Complex a_wp{};     // V_c - V(u_n)
    Complex b{};        // zeta^(n) - zeta^(n-1) - zeta^(c)
    double a_agreement = 0;
};
Flaschka flaschka(const TodaFrame &frame, int n, Complex t);
// (1/2) D log sigma_flat at c, derivative taken along d.
Complex zeta_c(const TodaFrame &frame);

// max over k of |da_k/dt - a_k (b_{k+1} - b_k)| and |db_k/dt - (a_k - a_{k-1})|, k = 1..window.
double flaschka_ode_residual(const TodaFrame &frame, int window, Complex t, double fd_step = 0,
                             FdMode mode = FdMode::Richardson);

struct TodaState {
    int N = 0;
    std::vector<Complex> a; // a_1..a_N
    std::vector<Complex> b; // b_1..b_N
    Complex t{};
};
TodaState state_from_frame(const TodaFrame &frame, int N, Complex t);

Eigen::MatrixXcd lax_matrix(const TodaState &state, Complex w_hat);

struct SpectralData {
    ComplexPolynomial P;
    std::vector<Complex> invariants; // I_1 .. I_{N+1}
    std::vector<Complex> weierstrass_z;
};
// P = Delta_{1,N} - a_N Delta_{2,N-1}, by the three-term recursion.
ComplexPolynomial toda_P(const TodaState &state);
SpectralData char_poly(const TodaState &state);
// det(L - z) = P(z) + (-1)^{N-1} (w_hat + prod a / w_hat)
Complex lax_det_formula(const TodaState &state, Complex z, Complex w_hat);

struct MorphismCheck {
    double identity_residual = 0; // w^2 vs P^2 - 4 prod a at points of the curve
    double det_residual = 0;      // det(L - z) at the same points
    std::vector<Complex> weierstrass_z;
    int genus = 0;
};
MorphismCheck spectral_morphism(const TodaState &state, std::uint64_t seed = 7, int samples = 10);

double invariant_drift(const TodaFrame &frame, int N, const std::vector<Complex> &times);

// max_n |a_{n+N} - a_n|, |b_{n+N} - b_n| for n = 0..2N
double periodicity_residual(const TodaFrame &frame, int N, Complex t);

struct SigmaInvariants {
    Complex I1_sum{};       // sum b_i
    Complex I1_claim{};     // N zeta^(c)
    Complex INp1_prod{};    // prod a_i
    Complex INp1_claim{};   // sigma_flat(c)^{-2N}
    Complex quasi_factor{}; // exp L(c, N c), the telescoped translation factor
    Complex I1_quasi{};     // d . grad L(., N c) - N zeta^(c)
};
SigmaInvariants sigma_invariants(const TodaFrame &frame, int N, Complex t);

} // namespace hypertoda

#endif
