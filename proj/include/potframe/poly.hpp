#ifndef POTFRAME_POLY_HPP
#define POTFRAME_POLY_HPP

#include <gmpxx.h>

#include <map>
#include <string>

namespace potframe {

using Rational = mpq_class;

std::string to_string(const Rational& q);

// Exponent pair of a monomial t^t x^x.
struct Monomial
{
    int t = 0;
    int x = 0;

    int degree() const noexcept { return t + x; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic order with t > x, largest first.
struct GrlexGreater
{
    bool operator()(const Monomial& a, const Monomial& b) const noexcept
    {
        if (a.degree() != b.degree())
            return a.degree() > b.degree();
        return a.t > b.t;
    }
};

/// Sparse polynomial in (t, x) with arbitrary-precision rational coefficients.
///
/// Terms are kept in decreasing graded-lex order and never store a zero
/// coefficient, so two equal polynomials have identical term maps.
class Poly
{
public:
    using Terms = std::map<Monomial, Rational, GrlexGreater>;

    Poly() = default;
    Poly(const Rational& c);
    Poly(long c) : Poly(Rational(c)) {}

    static Poly monomial(const Rational& c, int t_deg, int x_deg);
    static Poly t() { return monomial(1, 1, 0); }
    static Poly x() { return monomial(1, 0, 1); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    // Single term of the form t^a or x^b with coefficient one.
    bool is_unit_power() const noexcept;

    Monomial leading_monomial() const;
    const Rational& leading_coefficient() const;
    // Coefficient of the constant term (zero when absent).
    Rational constant_term() const;
    int degree_t() const noexcept;
    int degree_x() const noexcept;
    int total_degree() const noexcept;
    bool depends_on_t() const noexcept { return degree_t() > 0; }
    bool depends_on_x() const noexcept { return degree_x() > 0; }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    Poly deriv_t() const;
    Poly deriv_x() const;
    Poly pow(unsigned k) const;
    Rational eval(const Rational& t0, const Rational& x0) const;

    // Scaled so the grlex-leading coefficient is one. Zero stays zero.
    Poly monic() const;

    std::string str() const;

private:
    void add_term(const Monomial& m, const Rational& c);
    Terms terms_;
};

// Exact quotient a / b. Throws std::logic_error when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
// Same result by the primitive remainder sequence alone; slower, kept as a reference.
Poly prs_gcd(const Poly& a, const Poly& b);

} // namespace potframe

#endif // POTFRAME_POLY_HPP
