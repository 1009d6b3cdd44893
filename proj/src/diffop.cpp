#include "potframe/diffop.hpp"

#include "potframe/errors.hpp"

#include <gmpxx.h>

namespace potframe {

namespace {

Rational binomial(int n, int k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

} // namespace

XDiffOp::XDiffOp(std::vector<RatFun> coeffs) : c_(std::move(coeffs))
{
    trim();
}

void XDiffOp::trim()
{
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

XDiffOp XDiffOp::mult(const RatFun& f)
{
    return XDiffOp(std::vector<RatFun>{f});
}

XDiffOp XDiffOp::dx(int k)
{
    std::vector<RatFun> c(static_cast<std::size_t>(k) + 1);
    c.back() = RatFun(1);
    return XDiffOp(std::move(c));
}

RatFun XDiffOp::coeff(int k) const
{
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : RatFun();
}

XDiffOp& XDiffOp::operator+=(const XDiffOp& o)
{
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        c_[k] += o.c_[k];
    trim();
    return *this;
}

XDiffOp& XDiffOp::operator-=(const XDiffOp& o)
{
    return *this += -o;
}

XDiffOp XDiffOp::operator-() const
{
    XDiffOp r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

XDiffOp operator*(const RatFun& f, const XDiffOp& l)
{
    std::vector<RatFun> c = l.c_;
    for (auto& v : c)
        v *= f;
    return XDiffOp(std::move(c));
}

std::string XDiffOp::str() const
{
    if (c_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (int k = order(); k >= 0; --k) {
        if (c_[k].is_zero())
            continue;
        const std::string tail = k == 0 ? "" : (k == 1 ? "Dx" : "Dx^" + std::to_string(k));
        auto [neg, body] = render_scaled(c_[k], tail);
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += body;
        first = false;
    }
    return out;
}

XDiffOp compose(const XDiffOp& l, const XDiffOp& m)
{
    if (l.is_zero() || m.is_zero())
        return {};
    std::vector<RatFun> out(static_cast<std::size_t>(l.order() + m.order()) + 1);
    for (int j = 0; j <= m.order(); ++j) {
        // Derivatives of b_j are shared across all k.
        std::vector<RatFun> db{m.coeffs()[j]};
        for (int s = 1; s <= l.order(); ++s)
            db.push_back(db.back().is_zero() ? RatFun() : db.back().deriv_x());
        for (int k = 0; k <= l.order(); ++k) {
            const RatFun& ck = l.coeffs()[k];
            if (ck.is_zero())
                continue;
            for (int s = 0; s <= k; ++s) {
                if (db[s].is_zero())
                    continue;
                out[k - s + j] += ck * db[s] * RatFun(binomial(k, s));
            }
        }
    }
    return XDiffOp(std::move(out));
}

XDiffOp power(const XDiffOp& l, unsigned k)
{
    XDiffOp r = XDiffOp::identity();
    for (unsigned i = 0; i < k; ++i)
        r = compose(r, l);
    return r;
}

XDiffOp formal_adjoint(const XDiffOp& l)
{
    std::vector<RatFun> out(l.coeffs().size());
    for (int k = 0; k <= l.order(); ++k) {
        RatFun d = l.coeffs()[k];
        for (int s = 0; s <= k && !d.is_zero(); ++s) {
            // (-D)^k o c = (-1)^k sum_s C(k,s) c^{(s)} D^{k-s}
            Rational f = binomial(k, s);
            if (k % 2 == 1)
                f = -f;
            out[k - s] += d * RatFun(f);
            d = d.deriv_x();
        }
    }
    return XDiffOp(std::move(out));
}

bool is_self_adjoint(const XDiffOp& l)
{
    return formal_adjoint(l) == l;
}

XDiffOp partial_t(const XDiffOp& l)
{
    std::vector<RatFun> out;
    out.reserve(l.coeffs().size());
    for (const auto& c : l.coeffs())
        out.push_back(c.deriv_t());
    return XDiffOp(std::move(out));
}

RatFun apply(const XDiffOp& l, const RatFun& f)
{
    RatFun r;
    RatFun d = f;
    for (int k = 0; k <= l.order(); ++k) {
        if (d.is_zero())
            break;
        r += l.coeffs()[k] * d;
        d = d.deriv_x();
    }
    return r;
}

JetPoly apply(const XDiffOp& l, const JetPoly& p)
{
    JetPoly r;
    JetPoly d = p;
    for (int k = 0; k <= l.order(); ++k) {
        r += d * l.coeffs()[k];
        if (k < l.order())
            d = total_x(d);
    }
    return r;
}

JetPoly apply_jet(const XDiffOp& l, const std::string& dep)
{
    JetPoly r;
    for (int k = 0; k <= l.order(); ++k)
        r += JetPoly::var(dep, 0, k) * l.coeffs()[k];
    return r;
}

Division right_divide(const XDiffOp& l, const XDiffOp& m)
{
    if (m.is_zero())
        throw DivisionByZero();
    XDiffOp q;
    XDiffOp r = l;
    const int om = m.order();
    while (!r.is_zero() && r.order() >= om) {
        const int s = r.order() - om;
        const XDiffOp step = (r.leading() / m.leading()) * XDiffOp::dx(s);
        q += step;
        r -= compose(step, m);
    }
    return {q, r};
}

} // namespace potframe
