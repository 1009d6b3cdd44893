#ifndef POTFRAME_DIFFOP_HPP
#define POTFRAME_DIFFOP_HPP

#include "potframe/jet.hpp"
#include "potframe/ratfun.hpp"

#include <string>
#include <utility>
#include <vector>

namespace potframe {

/// Linear ordinary differential operator sum_k c_k D_x^k over Q(t, x),
/// stored fully expanded with a nonzero leading coefficient. The zero
/// operator has no coefficients.
class XDiffOp
{
public:
    XDiffOp() = default;
    explicit XDiffOp(std::vector<RatFun> coeffs);

    static XDiffOp identity() { return mult(RatFun(1)); }
    static XDiffOp mult(const RatFun& f);
    // D_x^k
    static XDiffOp dx(int k = 1);

    const std::vector<RatFun>& coeffs() const noexcept { return c_; }
    // Coefficient of D_x^k (zero beyond the order).
    RatFun coeff(int k) const;
    bool is_zero() const noexcept { return c_.empty(); }
    // -1 for the zero operator.
    int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const RatFun& leading() const { return c_.back(); }

    XDiffOp& operator+=(const XDiffOp& o);
    XDiffOp& operator-=(const XDiffOp& o);
    XDiffOp operator-() const;
    friend XDiffOp operator+(XDiffOp a, const XDiffOp& b) { return a += b; }
    friend XDiffOp operator-(XDiffOp a, const XDiffOp& b) { return a -= b; }
    // Left multiplication by a function: f * L = mult(f) o L.
    friend XDiffOp operator*(const RatFun& f, const XDiffOp& l);
    friend bool operator==(const XDiffOp& a, const XDiffOp& b) { return a.c_ == b.c_; }

    std::string str() const;

private:
    void trim();
    std::vector<RatFun> c_;
};

// L o M in normal form, via D_x o c = c D_x + c_x.
XDiffOp compose(const XDiffOp& l, const XDiffOp& m);
XDiffOp power(const XDiffOp& l, unsigned k);
// sum_k (-D_x)^k o c_k
XDiffOp formal_adjoint(const XDiffOp& l);
bool is_self_adjoint(const XDiffOp& l);
XDiffOp partial_t(const XDiffOp& l);

RatFun apply(const XDiffOp& l, const RatFun& f);
// L applied to an arbitrary differential polynomial (coefficients times D_x^k p).
JetPoly apply(const XDiffOp& l, const JetPoly& p);
// sum_k c_k d_{x^k}
JetPoly apply_jet(const XDiffOp& l, const std::string& dep);

struct Division
{
    XDiffOp quotient;
    XDiffOp remainder;
};

// L = Q o M + R with order(R) < order(M). Throws DivisionByZero when M = 0.
Division right_divide(const XDiffOp& l, const XDiffOp& m);

} // namespace potframe

#endif // POTFRAME_DIFFOP_HPP
