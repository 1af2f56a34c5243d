#ifndef HYPERTODA_CURVE_HPP
#define HYPERTODA_CURVE_HPP

#include "hypertoda/polynomial.hpp"

#include <span>
#include <vector>

namespace hypertoda
{

// Affine point (x, y) on y^2 = f(x), or the point at infinity.
struct CurvePoint {
    Complex x{};
    Complex y{};
    bool at_infinity = false;

    static CurvePoint infinity() noexcept
    {
        return {Complex{}, Complex{}, true};
    }
    // Hyperelliptic involution (x, y) -> (x, -y).
    CurvePoint involution() const noexcept
    {
        return {x, -y, at_infinity};
    }
};

// y^2 = f(x) = x^{2g+1} + lambda_{2g} x^{2g} + ... + lambda_0.
// The leading coefficient lambda_{2g+1} = 1 is implicit.
class HyperellipticCurve
{
public:
    static constexpr double default_separation = 1e-9;
    // |f'(e)| relative to sum k |c_k| |e|^{k-1}; a split double root sits near sqrt(eps).
    static constexpr double multiple_root_tol = 1e-7;

    HyperellipticCurve(int genus, std::vector<Complex> lambda, double separation = default_separation);

    int genus() const noexcept
    {
        return m_genus;
    }
    // lambda_k for k = 0..2g+1 (lambda_{2g+1} = 1, zero beyond).
    Complex lambda(int k) const noexcept;
    const std::vector<Complex> &lambdas() const noexcept
    {
        return m_lambda;
    }
    const ComplexPolynomial &f() const noexcept
    {
        return m_f;
    }
    // Roots of f sorted lexicographically by (re, im).
    const std::vector<Complex> &branch_points() const noexcept
    {
        return m_branch;
    }
    // max |e_i|, at least 1.
    double scale() const noexcept
    {
        return m_scale;
    }

    Complex eval_f(Complex x) const noexcept
    {
        return m_f(x);
    }
    // |y^2 - f(x)| <= tol (1 + |f(x)|)
    bool on_curve(const CurvePoint &p, double tol = 1e-9) const noexcept;
    // A point over x with the principal square root for y (sheet = +1) or its negative.
    CurvePoint lift(Complex x, int sheet = 1) const;
    double distance_to_branch(Complex x) const noexcept;

private:
    int m_genus;
    std::vector<Complex> m_lambda;
    ComplexPolynomial m_f;
    std::vector<Complex> m_branch;
    double m_scale = 1.0;
};

HyperellipticCurve make_curve(int genus, std::vector<Complex> lambda,
                              double separation = HyperellipticCurve::default_separation);

// Curve with f = prod (x - e_i); requires an odd number of roots.
HyperellipticCurve curve_from_roots(std::span<const Complex> roots);

std::vector<Complex> branch_points(const HyperellipticCurve &curve);

// Monomial basis of the affine ring: x^i (i <= g), x^{(i-g)/2 + g} (i-g even),
// x^{(i-g-1)/2} y (i-g odd).
Complex phi(const HyperellipticCurve &curve, int i, const CurvePoint &p);

// Exponents (a, b) such that phi_i = x^a y^b.
struct PhiExponents {
    int x_power;
    int y_power;
};
PhiExponents phi_exponents(int genus, int i) noexcept;

// Taylor coefficients of y(x0 + h) along the sheet through p, k = 0..order.
// Requires y != 0.
std::vector<Complex> y_jet(const HyperellipticCurve &curve, const CurvePoint &p, int order);
// Taylor coefficients of phi_i(x0 + h, y(x0 + h)).
std::vector<Complex> phi_jet(const HyperellipticCurve &curve, int i, const CurvePoint &p, int order);

// f(x1, x2) = sum_i x1^i x2^i (lambda_{2i+1} (x1 + x2) + 2 lambda_{2i}).
Complex baker_f2(const HyperellipticCurve &curve, Complex x1, Complex x2);

// Confluent limit of (f(x1, x2) - 2 y1 y2) / (x1 - x2)^2 as x2 -> x1 on one sheet.
Complex f12(const HyperellipticCurve &curve, Complex x);

ComplexPolynomial F_poly(std::span<const Complex> xs);
// prod_{i<j} (x_j - x_i)
Complex vandermonde(std::span<const Complex> xs);

} // namespace hypertoda

#endif
