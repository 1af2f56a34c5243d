#include "hypertoda/polynomial.hpp"

#include "hypertoda/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hypertoda
{

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
        case ErrorCode::BadArity: return "BadArity";
        case ErrorCode::DegenerateCurve: return "DegenerateCurve";
        case ErrorCode::RootFindFailure: return "RootFindFailure";
        case ErrorCode::BranchPointSingularity: return "BranchPointSingularity";
        case ErrorCode::QuadratureNonConvergence: return "QuadratureNonConvergence";
        case ErrorCode::LegendreCertificateFailure: return "LegendreCertificateFailure";
        case ErrorCode::CycleBasisFailure: return "CycleBasisFailure";
        case ErrorCode::TruncationInsufficient: return "TruncationInsufficient";
        case ErrorCode::CharacteristicsNotFound: return "CharacteristicsNotFound";
        case ErrorCode::NormalizationUnstable: return "NormalizationUnstable";
        case ErrorCode::ThetaDivisorPole: return "ThetaDivisorPole";
        case ErrorCode::PathThroughBranchPoint: return "PathThroughBranchPoint";
        case ErrorCode::NotALatticeVector: return "NotALatticeVector";
        case ErrorCode::IndeterminateLimit: return "IndeterminateLimit";
        case ErrorCode::ConfluentInput: return "ConfluentInput";
        case ErrorCode::DegreeMismatch: return "DegreeMismatch";
        case ErrorCode::NotTorsion: return "NotTorsion";
        case ErrorCode::MultiplesNotDistinct: return "MultiplesNotDistinct";
        case ErrorCode::DegenerateConicPair: return "DegenerateConicPair";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

ComplexPolynomial::ComplexPolynomial(std::vector<Complex> coeffs) : m_c(std::move(coeffs))
{
    while (!m_c.empty() && m_c.back() == Complex{}) {
        m_c.pop_back();
    }
}

ComplexPolynomial::ComplexPolynomial(std::initializer_list<Complex> coeffs)
    : ComplexPolynomial(std::vector<Complex>(coeffs))
{
}

ComplexPolynomial ComplexPolynomial::constant(Complex c)
{
    return ComplexPolynomial(std::vector<Complex>{c});
}

ComplexPolynomial ComplexPolynomial::monomial(int degree, Complex c)
{
    std::vector<Complex> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return ComplexPolynomial(std::move(v));
}

ComplexPolynomial ComplexPolynomial::from_roots(std::span<const Complex> roots)
{
    std::vector<Complex> c{1.0};
    for (const auto r : roots) {
        std::vector<Complex> next(c.size() + 1);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= r * c[k];
        }
        c = std::move(next);
    }
    return ComplexPolynomial(std::move(c));
}

double ComplexPolynomial::max_abs_coeff() const noexcept
{
    double m = 0;
    for (const auto &c : m_c) {
        m = std::max(m, std::abs(c));
    }
    return m;
}

Complex ComplexPolynomial::operator()(Complex x) const noexcept
{
    Complex acc{};
    for (auto it = m_c.rbegin(); it != m_c.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

ComplexPolynomial ComplexPolynomial::derivative() const
{
    if (m_c.size() <= 1) {
        return {};
    }
    std::vector<Complex> d(m_c.size() - 1);
    for (std::size_t k = 1; k < m_c.size(); ++k) {
        d[k - 1] = static_cast<double>(k) * m_c[k];
    }
    return ComplexPolynomial(std::move(d));
}

std::vector<Complex> ComplexPolynomial::taylor_at(Complex x0) const
{
    // Repeated synthetic division by (x - x0).
    std::vector<Complex> c = m_c;
    const std::size_t n = c.size();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        for (std::size_t j = n - 1; j > k; --j) {
            c[j - 1] += x0 * c[j];
        }
    }
    return c;
}

ComplexPolynomial ComplexPolynomial::trimmed(double rel_tol) const
{
    const double scale = max_abs_coeff();
    std::vector<Complex> c = m_c;
    while (!c.empty() && std::abs(c.back()) <= rel_tol * scale) {
        c.pop_back();
    }
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial ComplexPolynomial::monic() const
{
    if (m_c.empty()) {
        return {};
    }
    ComplexPolynomial r = *this;
    r *= 1.0 / leading();
    return r;
}

ComplexPolynomial &ComplexPolynomial::operator+=(const ComplexPolynomial &o)
{
    if (o.m_c.size() > m_c.size()) {
        m_c.resize(o.m_c.size());
    }
    for (std::size_t k = 0; k < o.m_c.size(); ++k) {
        m_c[k] += o.m_c[k];
    }
    *this = ComplexPolynomial(std::move(m_c));
    return *this;
}

ComplexPolynomial &ComplexPolynomial::operator-=(const ComplexPolynomial &o)
{
    return *this += -o;
}

ComplexPolynomial &ComplexPolynomial::operator*=(const ComplexPolynomial &o)
{
    if (m_c.empty() || o.m_c.empty()) {
        m_c.clear();
        return *this;
    }
    std::vector<Complex> r(m_c.size() + o.m_c.size() - 1);
    for (std::size_t i = 0; i < m_c.size(); ++i) {
        for (std::size_t j = 0; j < o.m_c.size(); ++j) {
            r[i + j] += m_c[i] * o.m_c[j];
        }
    }
    *this = ComplexPolynomial(std::move(r));
    return *this;
}

ComplexPolynomial &ComplexPolynomial::operator*=(Complex s)
{
    for (auto &c : m_c) {
        c *= s;
    }
    *this = ComplexPolynomial(std::move(m_c));
    return *this;
}

ComplexPolynomial ComplexPolynomial::operator-() const
{
    ComplexPolynomial r = *this;
    for (auto &c : r.m_c) {
        c = -c;
    }
    return r;
}

ComplexPolynomial ComplexPolynomial::pow(int e) const
{
    ComplexPolynomial r = constant(1.0);
    for (int k = 0; k < e; ++k) {
        r *= *this;
    }
    return r;
}

std::pair<ComplexPolynomial, ComplexPolynomial> divmod(const ComplexPolynomial &num,
                                                      const ComplexPolynomial &den)
{
    if (den.is_zero()) {
        throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
    }
    const int dn = den.degree();
    std::vector<Complex> rem = num.coeffs();
    if (num.degree() < dn) {
        return {ComplexPolynomial{}, num};
    }
    std::vector<Complex> q(static_cast<std::size_t>(num.degree() - dn) + 1);
    const Complex lead = den.leading();
    for (int k = num.degree(); k >= dn; --k) {
        const Complex t = rem[k] / lead;
        q[k - dn] = t;
        for (int j = 0; j <= dn; ++j) {
            rem[k - dn + j] -= t * den.coeff(j);
        }
        rem[k] = 0;
    }
    rem.resize(static_cast<std::size_t>(dn));
    return {ComplexPolynomial(std::move(q)), ComplexPolynomial(std::move(rem))};
}

std::vector<Complex> polynomial_roots(const ComplexPolynomial &p_in, RootFinderOptions opts)
{
    int zeros = 0;
    while (zeros < p_in.degree() && p_in.coeff(zeros) == Complex{}) {
        ++zeros;
    }
    if (zeros > 0) {
        std::vector<Complex> rest(p_in.coeffs().begin() + zeros, p_in.coeffs().end());
        auto r = polynomial_roots(ComplexPolynomial(std::move(rest)), opts);
        r.insert(r.end(), static_cast<std::size_t>(zeros), Complex{});
        return r;
    }
    const ComplexPolynomial p = p_in.monic();
    const int n = p.degree();
    if (n < 1) {
        return {};
    }
    if (n == 1) {
        return {-p.coeff(0)};
    }
    const ComplexPolynomial dp = p.derivative();

    // Initial guesses on a circle of radius given by the Fujiwara bound.
    double radius = 0;
    for (int k = 0; k < n; ++k) {
        const double a = std::abs(p.coeff(k));
        const double term = k == 0 ? std::pow(a / 2.0, 1.0 / n) : std::pow(a, 1.0 / (n - k));
        radius = std::max(radius, 2.0 * term);
    }
    radius = std::max(radius, 1e-3);
    std::vector<Complex> z(n);
    for (int k = 0; k < n; ++k) {
        const double ang = 2.0 * std::numbers::pi * k / n + 0.4;
        z[k] = std::polar(0.5 * radius, ang);
    }

    bool converged = false;
    for (int it = 0; it < opts.max_iterations && !converged; ++it) {
        converged = true;
        for (int k = 0; k < n; ++k) {
            const Complex pv = p(z[k]);
            const Complex dv = dp(z[k]);
            if (pv == Complex{}) {
                continue;
            }
            const Complex ratio = pv / dv;
            Complex sum{};
            for (int j = 0; j < n; ++j) {
                if (j != k) {
                    sum += 1.0 / (z[k] - z[j]);
                }
            }
            const Complex w = ratio / (1.0 - ratio * sum);
            z[k] -= w;
            if (std::abs(w) > opts.rel_tol * std::max(1.0, std::abs(z[k]))) {
                converged = false;
            }
        }
    }
    if (!converged) {
        // Accept a small backward error; clustered roots stall the step test.
        converged = true;
        for (const auto r : z) {
            double mag = 0;
            for (int k = n; k >= 0; --k) {
                mag = mag * std::abs(r) + std::abs(p.coeff(k));
            }
            if (std::abs(p(r)) > 1e-10 * mag) {
                converged = false;
            }
        }
    }
    if (!converged) {
        throw Error(ErrorCode::RootFindFailure,
                    "Aberth iteration did not converge for degree " + std::to_string(n));
    }
    for (auto &r : z) {
        const Complex dv = dp(r);
        if (dv != Complex{}) {
            const Complex step = p(r) / dv;
            if (std::abs(step) < 1e-6 * std::max(1.0, std::abs(r))) {
                r -= step;
            }
        }
    }
    return z;
}

bool lex_less(Complex a, Complex b, double tie_tol) noexcept
{
    if (std::abs(a.real() - b.real()) > tie_tol) {
        return a.real() < b.real();
    }
    return a.imag() < b.imag();
}

void sort_lex(std::vector<Complex> &zs, double tie_tol)
{
    std::sort(zs.begin(), zs.end(), [tie_tol](Complex a, Complex b) { return lex_less(a, b, tie_tol); });
}

} // namespace hypertoda
