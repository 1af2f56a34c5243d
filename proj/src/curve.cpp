#include "hypertoda/curve.hpp"

#include "hypertoda/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hypertoda
{

HyperellipticCurve::HyperellipticCurve(int genus, std::vector<Complex> lambda, double separation)
    : m_genus(genus), m_lambda(std::move(lambda))
{
    if (genus < 1) {
        throw Error(ErrorCode::BadArity, "genus must be at least 1");
    }
    if (static_cast<int>(m_lambda.size()) != 2 * genus + 1) {
        throw Error(ErrorCode::BadArity, "expected " + std::to_string(2 * genus + 1) +
                                             " coefficients, got " + std::to_string(m_lambda.size()));
    }
    std::vector<Complex> c = m_lambda;
    c.push_back(1.0);
    m_f = ComplexPolynomial(std::move(c));

    m_branch = polynomial_roots(m_f);
    sort_lex(m_branch);
    const ComplexPolynomial df = m_f.derivative();
    for (const auto e : m_branch) {
        double size = 0;
        for (int k = 1; k <= m_f.degree(); ++k) {
            size += k * std::abs(m_f.coeff(k)) * std::pow(std::abs(e), k - 1);
        }
        if (std::abs(df(e)) < multiple_root_tol * size) {
            throw Error(ErrorCode::DegenerateCurve, "f has a repeated root near (" + std::to_string(e.real()) +
                                                        ", " + std::to_string(e.imag()) + ")");
        }
    }
    for (std::size_t i = 0; i < m_branch.size(); ++i) {
        m_scale = std::max(m_scale, std::abs(m_branch[i]));
        for (std::size_t j = i + 1; j < m_branch.size(); ++j) {
            if (std::abs(m_branch[i] - m_branch[j]) < separation) {
                throw Error(ErrorCode::DegenerateCurve, "f has a repeated root near (" +
                                                            std::to_string(m_branch[i].real()) + ", " +
                                                            std::to_string(m_branch[i].imag()) + ")");
            }
        }
    }
}

Complex HyperellipticCurve::lambda(int k) const noexcept
{
    if (k < 0) {
        return {};
    }
    if (k < static_cast<int>(m_lambda.size())) {
        return m_lambda[k];
    }
    return k == 2 * m_genus + 1 ? Complex{1.0} : Complex{};
}

bool HyperellipticCurve::on_curve(const CurvePoint &p, double tol) const noexcept
{
    if (p.at_infinity) {
        return true;
    }
    const Complex fx = m_f(p.x);
    return std::abs(p.y * p.y - fx) <= tol * (1.0 + std::abs(fx));
}

CurvePoint HyperellipticCurve::lift(Complex x, int sheet) const
{
    const Complex y = std::sqrt(m_f(x));
    return {x, sheet >= 0 ? y : -y, false};
}

double HyperellipticCurve::distance_to_branch(Complex x) const noexcept
{
    double d = std::numeric_limits<double>::infinity();
    for (const auto e : m_branch) {
        d = std::min(d, std::abs(x - e));
    }
    return d;
}

HyperellipticCurve make_curve(int genus, std::vector<Complex> lambda, double separation)
{
    return HyperellipticCurve(genus, std::move(lambda), separation);
}

HyperellipticCurve curve_from_roots(std::span<const Complex> roots)
{
    if (roots.size() < 3 || roots.size() % 2 == 0) {
        throw Error(ErrorCode::BadArity, "need an odd number (>= 3) of roots");
    }
    const auto f = ComplexPolynomial::from_roots(roots);
    std::vector<Complex> lambda(f.coeffs().begin(), f.coeffs().end() - 1);
    return HyperellipticCurve(static_cast<int>(roots.size() - 1) / 2, std::move(lambda));
}

std::vector<Complex> branch_points(const HyperellipticCurve &curve)
{
    return curve.branch_points();
}

PhiExponents phi_exponents(int genus, int i) noexcept
{
    if (i <= genus) {
        return {i, 0};
    }
    const int d = i - genus;
    if (d % 2 == 0) {
        return {d / 2 + genus, 0};
    }
    return {d / 2, 1};
}

Complex phi(const HyperellipticCurve &curve, int i, const CurvePoint &p)
{
    const auto [a, b] = phi_exponents(curve.genus(), i);
    Complex v = std::pow(p.x, a);
    if (a == 0) {
        v = 1.0;
    }
    return b == 1 ? v * p.y : v;
}

std::vector<Complex> y_jet(const HyperellipticCurve &curve, const CurvePoint &p, int order)
{
    if (p.y == Complex{}) {
        throw Error(ErrorCode::BranchPointSingularity, "y jet at a branch point");
    }
    const auto fk = curve.f().taylor_at(p.x);
    auto f_at = [&](int k) { return k < static_cast<int>(fk.size()) ? fk[k] : Complex{}; };
    std::vector<Complex> y(static_cast<std::size_t>(order) + 1);
    y[0] = p.y;
    for (int k = 1; k <= order; ++k) {
        Complex acc = f_at(k);
        for (int j = 1; j < k; ++j) {
            acc -= y[j] * y[k - j];
        }
        y[k] = acc / (2.0 * p.y);
    }
    return y;
}

std::vector<Complex> phi_jet(const HyperellipticCurve &curve, int i, const CurvePoint &p, int order)
{
    const auto [a, b] = phi_exponents(curve.genus(), i);
    // (x0 + h)^a
    std::vector<Complex> xa(static_cast<std::size_t>(order) + 1);
    Complex binom{1.0};
    for (int k = 0; k <= std::min(a, order); ++k) {
        xa[k] = binom * std::pow(p.x, a - k);
        if (a - k == 0) {
            xa[k] = binom;
        }
        binom = binom * static_cast<double>(a - k) / static_cast<double>(k + 1);
    }
    if (b == 0) {
        return xa;
    }
    const auto y = y_jet(curve, p, order);
    std::vector<Complex> out(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) {
        for (int j = 0; j <= k; ++j) {
            out[k] += xa[j] * y[k - j];
        }
    }
    return out;
}

Complex baker_f2(const HyperellipticCurve &curve, Complex x1, Complex x2)
{
    Complex sum{};
    Complex p{1.0};
    const Complex prod = x1 * x2;
    for (int i = 0; i <= curve.genus(); ++i) {
        sum += p * (curve.lambda(2 * i + 1) * (x1 + x2) + 2.0 * curve.lambda(2 * i));
        p *= prod;
    }
    return sum;
}

Complex f12(const HyperellipticCurve &curve, Complex x)
{
    const auto &f = curve.f();
    const Complex fx = f(x);
    if (std::abs(fx) < 1e-12 * (1.0 + f.max_abs_coeff())) {
        throw Error(ErrorCode::BranchPointSingularity, "f12 evaluated at a branch point");
    }
    const Complex d1 = f.derivative()(x);
    const Complex d2 = f.derivative().derivative()(x);
    // Half the second x2-derivative of f(x1, x2) on the diagonal.
    Complex half_second{};
    for (int i = 1; i <= curve.genus(); ++i) {
        half_second += static_cast<double>(i * i) * curve.lambda(2 * i + 1) * std::pow(x, 2 * i - 1);
        if (i >= 2) {
            half_second += static_cast<double>(i * (i - 1)) * curve.lambda(2 * i) * std::pow(x, 2 * i - 2);
        }
    }
    return d1 * d1 / (4.0 * fx) - 0.5 * d2 + half_second;
}

ComplexPolynomial F_poly(std::span<const Complex> xs)
{
    return ComplexPolynomial::from_roots(xs);
}

Complex vandermonde(std::span<const Complex> xs)
{
    Complex v{1.0};
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            v *= xs[j] - xs[i];
        }
    }
    return v;
}

} // namespace hypertoda
