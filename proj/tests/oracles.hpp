#ifndef HYPERTODA_TESTS_ORACLES_HPP
#define HYPERTODA_TESTS_ORACLES_HPP

// Independent closed forms the unit tests compare against.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace oracle
{

using Complex = std::complex<double>;

// Real half period of y^2 = x^3 - x with du = dx / (2y): int_1^inf dx / (2 sqrt(x^3 - x)).
inline double lemniscate_half_period()
{
    const double g = std::tgamma(0.25);
    return g * g / (4.0 * std::sqrt(2.0 * std::numbers::pi));
}

// theta_3(0 | tau = i) = pi^{1/4} / Gamma(3/4)
inline double theta3_at_i()
{
    return std::pow(std::numbers::pi, 0.25) / std::tgamma(0.75);
}

// f(x) = x^3 - x and its derivatives.
inline Complex f_e1(Complex x)
{
    return x * x * x - x;
}
inline Complex df_e1(Complex x)
{
    return 3.0 * x * x - 1.0;
}
inline Complex d2f_e1(Complex x)
{
    return 6.0 * x;
}

// Second y-jet coefficient y''/2 for y = sqrt(f).
inline Complex y_second_jet(Complex x, Complex y)
{
    const Complex f = f_e1(x), f1 = df_e1(x), f2 = d2f_e1(x);
    return (2.0 * f * f2 - f1 * f1) / (8.0 * f * y);
}

// Classical division polynomials for y^2 = x^3 + a x + b, ascending coefficients.
inline std::vector<Complex> psi3(Complex a, Complex b)
{
    return {-a * a, 12.0 * b, 6.0 * a, 0.0, 3.0};
}
// psi_4 / (4 y)
inline std::vector<Complex> psi4_over_4y(Complex a, Complex b)
{
    return {-8.0 * b * b - a * a * a, -4.0 * a * b, -5.0 * a * a, 20.0 * b, 5.0 * a, 0.0, 1.0};
}

// (x^2 + 1)(x^2 + 2x - 1)(x^2 - 2x - 1) expanded: x^6 - 5x^4 - 5x^2 + 1.
inline std::vector<Complex> psi4_factored_e1()
{
    return {1.0, 0.0, -5.0, 0.0, -5.0, 0.0, 1.0};
}

// Torsion abscissae on y^2 = x^3 - x.
inline double x_order3()
{
    return std::sqrt(9.0 + 6.0 * std::sqrt(3.0)) / 3.0;
}
inline double x_order4()
{
    return 1.0 + std::sqrt(2.0);
}

// Weierstrass: wp'^2 = 4 wp^3 - g2 wp - g3 with g2 = -4a, g3 = -4b for (d/du)x = 2y.
inline Complex weierstrass_defect(Complex wp, Complex dwp, Complex a, Complex b)
{
    return dwp * dwp - (4.0 * wp * wp * wp + 4.0 * a * wp + 4.0 * b);
}

} // namespace oracle

#endif
