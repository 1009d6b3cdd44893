#ifndef POTFRAME_RATFUN_HPP
#define POTFRAME_RATFUN_HPP

#include "potframe/poly.hpp"

#include <string>
#include <utility>

namespace potframe {

enum class Var { t, x };

/// Element of Q(t, x) kept as a reduced fraction num/den with den monic in
/// graded-lex order. Zero is 0/1. Structural equality is value equality.
class RatFun
{
public:
    RatFun() : den_(1) {}
    RatFun(const Rational& c) : num_(c), den_(1) {}
    RatFun(long c) : RatFun(Rational(c)) {}
    RatFun(int c) : RatFun(Rational(c)) {}
    RatFun(Poly p) : num_(std::move(p)), den_(1) {}
    RatFun(Poly num, Poly den); // throws DivisionByZero when den == 0

    static RatFun t() { return RatFun(Poly::t()); }
    static RatFun x() { return RatFun(Poly::x()); }

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return den_.is_constant() && num_ == Poly(1); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }
    bool depends_on_t() const noexcept { return num_.depends_on_t() || den_.depends_on_t(); }
    bool depends_on_x() const noexcept { return num_.depends_on_x() || den_.depends_on_x(); }
    // Sign of the leading numerator coefficient; used to pull '-' out when rendering sums.
    bool negative_lead() const { return !num_.is_zero() && num_.leading_coefficient() < 0; }

    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);
    RatFun operator-() const;

    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
    friend bool operator==(const RatFun& a, const RatFun& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RatFun deriv(Var v) const;
    RatFun deriv_t() const { return deriv(Var::t); }
    RatFun deriv_x() const { return deriv(Var::x); }
    // k-th partial derivative in x.
    RatFun deriv_x(int k) const;
    RatFun pow(int k) const;

    // Exact value at (t0, x0); throws PoleError when the denominator vanishes.
    Rational eval(const Rational& t0, const Rational& x0) const;

    std::string str() const;

private:
    struct Raw
    {};
    RatFun(Poly num, Poly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    Poly num_;
    Poly den_;
};

inline RatFun deriv(const RatFun& f, Var v)
{
    return f.deriv(v);
}

inline Rational eval_at(const RatFun& f, const Rational& t0, const Rational& x0)
{
    return f.eval(t0, x0);
}

// Renders a coefficient times a (possibly empty) product `tail` as it appears
// inside a sum. Returns {negative, magnitude-text}; the caller prints the sign.
std::pair<bool, std::string> render_scaled(const RatFun& c, const std::string& tail);

} // namespace potframe

#endif // POTFRAME_RATFUN_HPP
