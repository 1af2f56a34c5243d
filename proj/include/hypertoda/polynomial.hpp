#ifndef HYPERTODA_POLYNOMIAL_HPP
#define HYPERTODA_POLYNOMIAL_HPP

#include <complex>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace hypertoda
{

using Complex = std::complex<double>;

// Dense univariate polynomial over C, coefficients in ascending degree.
// The zero polynomial is stored as an empty coefficient list.
class ComplexPolynomial
{
public:
    ComplexPolynomial() = default;
    explicit ComplexPolynomial(std::vector<Complex> coeffs);
    ComplexPolynomial(std::initializer_list<Complex> coeffs);

    static ComplexPolynomial constant(Complex c);
    static ComplexPolynomial monomial(int degree, Complex c = 1.0);
    // prod (x - r_i)
    static ComplexPolynomial from_roots(std::span<const Complex> roots);

    int degree() const noexcept
    {
        return static_cast<int>(m_c.size()) - 1;
    }
    bool is_zero() const noexcept
    {
        return m_c.empty();
    }
    const std::vector<Complex> &coeffs() const noexcept
    {
        return m_c;
    }
    Complex coeff(int k) const noexcept
    {
        return (k >= 0 && k < static_cast<int>(m_c.size())) ? m_c[k] : Complex{};
    }
    Complex leading() const noexcept
    {
        return m_c.empty() ? Complex{} : m_c.back();
    }
    double max_abs_coeff() const noexcept;

    Complex operator()(Complex x) const noexcept;
    ComplexPolynomial derivative() const;
    // Taylor coefficients of p(x0 + h) in h, i.e. p^{(k)}(x0)/k!, k = 0..deg.
    std::vector<Complex> taylor_at(Complex x0) const;

    // Drops leading coefficients with |c| <= tol * max|c|.
    ComplexPolynomial trimmed(double rel_tol = 0.0) const;
    ComplexPolynomial monic() const;

    ComplexPolynomial &operator+=(const ComplexPolynomial &o);
    ComplexPolynomial &operator-=(const ComplexPolynomial &o);
    ComplexPolynomial &operator*=(const ComplexPolynomial &o);
    ComplexPolynomial &operator*=(Complex s);

    friend ComplexPolynomial operator+(ComplexPolynomial a, const ComplexPolynomial &b)
    {
        return a += b;
    }
    friend ComplexPolynomial operator-(ComplexPolynomial a, const ComplexPolynomial &b)
    {
        return a -= b;
    }
    friend ComplexPolynomial operator*(ComplexPolynomial a, const ComplexPolynomial &b)
    {
        return a *= b;
    }
    friend ComplexPolynomial operator*(ComplexPolynomial a, Complex s)
    {
        return a *= s;
    }
    friend ComplexPolynomial operator*(Complex s, ComplexPolynomial a)
    {
        return a *= s;
    }
    ComplexPolynomial operator-() const;

    ComplexPolynomial pow(int e) const;

private:
    std::vector<Complex> m_c;
};

// Euclidean division; returns (quotient, remainder).
std::pair<ComplexPolynomial, ComplexPolynomial> divmod(const ComplexPolynomial &num,
                                                      const ComplexPolynomial &den);

struct RootFinderOptions {
    int max_iterations = 1000;
    double rel_tol = 1e-13;
};

// Simultaneous (Aberth-Ehrlich) iteration for all roots, followed by one Newton
// polish per root. Throws RootFindFailure when the iteration does not settle.
std::vector<Complex> polynomial_roots(const ComplexPolynomial &p, RootFinderOptions opts = {});

// Lexicographic ordering by (real, imag) with a tie tolerance on the real part.
bool lex_less(Complex a, Complex b, double tie_tol = 1e-9) noexcept;
void sort_lex(std::vector<Complex> &zs, double tie_tol = 1e-9);

} // namespace hypertoda

#endif
