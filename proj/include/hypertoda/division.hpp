#ifndef HYPERTODA_DIVISION_HPP
#define HYPERTODA_DIVISION_HPP

#include "hypertoda/toda.hpp"

#include <vector>

namespace hypertoda
{

// psi_n = sign (2y)^{y_exponent} alpha(x)
struct DivisionPolynomial {
    int n = 0;
    int y_exponent = 0;
    ComplexPolynomial alpha;
    int sign = 1;
};

int division_y_exponent(int g, int n);
// Expected deg alpha_n for n >= g + 2; -1 otherwise.
int division_alpha_degree(int g, int n);

// (2y)^{n(n-1)/2} times the Toeplitz determinant of y-jets at p.
Complex cantor_psi(const HyperellipticCurve &curve, int n, const CurvePoint &p);
// Exact alpha_n from the y-cleared Toeplitz determinant; throws DegreeMismatch.
DivisionPolynomial cantor_alpha(const HyperellipticCurve &curve, int n);

// AlongU1: D = 2y d/dx. AlongUg: D = (2y / x^{g-1}) d/dx. They coincide for g = 1.
enum class KiepertDerivation { AlongU1, AlongUg };

// det[D^k phi_j]_{k,j=1..n-1} / (1! 2! ... (n-1)!)
Complex kiepert_psi(const HyperellipticCurve &curve, int n, const CurvePoint &p,
                    KiepertDerivation mode = KiepertDerivation::AlongU1);

struct ProportionalityCheck {
    Complex ratio{};    // mean kiepert / cantor
    double spread = 0;  // max |r_i - mean| / |mean|
};
ProportionalityCheck kiepert_vs_cantor(const HyperellipticCurve &curve, int n, int samples, std::uint64_t seed,
                                       KiepertDerivation mode = KiepertDerivation::AlongU1);

std::vector<CurvePoint> phi_roots(const HyperellipticCurve &curve, int n);

struct TorsionCandidate {
    CurvePoint point;
    int order_target = 0;               // 2N
    std::vector<double> residuals;      // normalized |alpha_m(x)|, m = 2N-g+1 .. 2N+g-1
};
// Points whose x is a common root of alpha_m over the window; branch points are dropped.
std::vector<TorsionCandidate> xi_set(const HyperellipticCurve &curve, int N, double cluster_tol = 1e-6);
// Same search for a single odd order n (window {n}).
std::vector<TorsionCandidate> torsion_candidates(const HyperellipticCurve &curve, int n);

struct TorsionFrame {
    TodaFrame frame;
    int period = 0;
    double lattice_residual = 0; // of N c
};
// Throws NotTorsion when N c is not a lattice vector to 1e-6.
TorsionFrame torsion_to_frame(std::shared_ptr<const SigmaContext> ctx, const CurvePoint &p, int N,
                              const Eigen::VectorXcd &base, double tol = 1e-6);

struct DivisibilityResult {
    bool divides = false;
    std::vector<double> remainders; // per m, max |remainder coeff| / max |coeff|
    std::vector<Complex> multiples_x;
};
// Genus one only: multiples lP, l = 1..2N-1, computed by the chord construction.
DivisibilityResult divisibility_check(const HyperellipticCurve &curve, const CurvePoint &p, int N,
                                      double tol = 1e-6);

// Classical recurrence for y^2 = x^3 + a x + b; returns psi_n with one y stripped for even n.
ComplexPolynomial elliptic_psi_oracle(Complex a, Complex b, int n);

} // namespace hypertoda

#endif
