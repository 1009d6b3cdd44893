#include "potframe/ratfun.hpp"

#include "potframe/errors.hpp"

namespace potframe {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den))
{
    normalize();
}

void RatFun::normalize()
{
    if (den_.is_zero())
        throw DivisionByZero();
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (!den_.is_constant() && !num_.is_constant()) {
        Poly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    const Rational lc = den_.leading_coefficient();
    if (lc != 1) {
        const Rational inv = 1 / lc;
        num_ *= inv;
        den_ *= inv;
    }
}

RatFun& RatFun::operator+=(const RatFun& o)
{
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        normalize();
        return *this;
    }
    if (den_.is_constant() && o.den_.is_constant()) {
        num_ += o.num_;
        return *this;
    }
    // Henrici: with g = gcd(b, d) only gcd(numerator, g) can be nontrivial.
    const Poly g = gcd(den_, o.den_);
    const Poly b1 = exact_div(den_, g);
    const Poly d1 = exact_div(o.den_, g);
    Poly n = num_ * d1 + o.num_ * b1;
    Poly d = den_ * d1;
    if (n.is_zero())
        return *this = RatFun();
    const Poly g2 = gcd(n, g);
    if (!g2.is_constant()) {
        n = exact_div(n, g2);
        d = exact_div(d, g2);
    }
    *this = RatFun(std::move(n), std::move(d), Raw{});
    return *this;
}

RatFun RatFun::operator-() const
{
    return RatFun(-num_, den_, Raw{});
}

RatFun& RatFun::operator-=(const RatFun& o)
{
    return *this += -o;
}

RatFun& RatFun::operator*=(const RatFun& o)
{
    if (is_zero() || o.is_zero())
        return *this = RatFun();
    if (is_polynomial() && o.is_polynomial()) {
        num_ = num_ * o.num_;
        return *this;
    }
    Poly a = num_, b = den_, c = o.num_, d = o.den_;
    const Poly g1 = gcd(a, d);
    if (!g1.is_constant()) {
        a = exact_div(a, g1);
        d = exact_div(d, g1);
    }
    const Poly g2 = gcd(c, b);
    if (!g2.is_constant()) {
        c = exact_div(c, g2);
        b = exact_div(b, g2);
    }
    *this = RatFun(a * c, b * d, Raw{});
    return *this;
}

RatFun& RatFun::operator/=(const RatFun& o)
{
    if (o.is_zero())
        throw DivisionByZero();
    const Rational inv = 1 / o.num_.leading_coefficient();
    RatFun recip(o.den_ * inv, o.num_ * inv, Raw{});
    return *this *= recip;
}

RatFun RatFun::deriv(Var v) const
{
    auto d = [v](const Poly& p) { return v == Var::t ? p.deriv_t() : p.deriv_x(); };
    if (is_polynomial())
        return RatFun(d(num_) * Rational(1 / den_.leading_coefficient()));
    // With g = gcd(q, q'), (p/q)' = (p' (q/g) - p (q'/g)) / (q (q/g)).
    const Poly dq = d(den_);
    if (dq.is_zero())
        return RatFun(d(num_), den_);
    const Poly g = gcd(den_, dq);
    const Poly q1 = exact_div(den_, g);
    return RatFun(d(num_) * q1 - num_ * exact_div(dq, g), den_ * q1);
}

RatFun RatFun::deriv_x(int k) const
{
    RatFun r = *this;
    for (int i = 0; i < k; ++i)
        r = r.deriv_x();
    return r;
}

RatFun RatFun::pow(int k) const
{
    if (k < 0)
        return RatFun(1) / pow(-k);
    return RatFun(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)), Raw{});
}

Rational RatFun::eval(const Rational& t0, const Rational& x0) const
{
    const Rational d = den_.eval(t0, x0);
    if (d == 0)
        throw PoleError("(t, x) = (" + to_string(t0) + ", " + to_string(x0) + ")");
    return num_.eval(t0, x0) / d;
}

namespace {

std::string num_part(const Poly& p)
{
    return p.terms().size() == 1 ? p.str() : "(" + p.str() + ")";
}

std::string den_part(const Poly& p)
{
    return p.is_unit_power() ? p.str() : "(" + p.str() + ")";
}

} // namespace

std::string RatFun::str() const
{
    if (is_polynomial())
        return num_.str();
    return num_part(num_) + "/" + den_part(den_);
}

std::pair<bool, std::string> render_scaled(const RatFun& c, const std::string& tail)
{
    const bool neg = c.negative_lead();
    const RatFun m = neg ? -c : c;
    std::string s;
    if (m.is_one() && !tail.empty())
        return {neg, tail};
    if (m.is_polynomial())
        s = num_part(m.num());
    else
        s = num_part(m.num()) + "/" + den_part(m.den());
    if (!tail.empty())
        s += "*" + tail;
    return {neg, s};
}

} // namespace potframe
