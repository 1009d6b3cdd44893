#include "potframe/parse.hpp"

#include "potframe/errors.hpp"

#include <cctype>
#include <optional>

namespace potframe {

namespace {

enum class Mode { scalar, jet, op };

// Intermediate value: a differential polynomial, or an operator once Dx shows up.
struct Value
{
    JetPoly jet;
    std::optional<XDiffOp> op;
    std::size_t pos = 0;
};

class Parser
{
public:
    Parser(const std::string& s, Mode mode, ParseOptions opts) : s_(s), mode_(mode), opts_(opts) {}

    Value expr()
    {
        Value v = term();
        for (;;) {
            skip();
            const char c = peek();
            if (c != '+' && c != '-')
                return v;
            ++i_;
            Value r = term();
            v = add(std::move(v), std::move(r), c == '-');
        }
    }

    void expect_end()
    {
        skip();
        if (i_ != s_.size())
            fail("unexpected '" + std::string(1, s_[i_]) + "'");
    }

    void expect(char c)
    {
        skip();
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++i_;
    }

    // name_t* x* as a jet variable; independent variables are rejected.
    JetVar jet_var()
    {
        skip();
        const std::size_t at = i_;
        const auto tok = identifier();
        if (!tok)
            fail("expected a jet variable");
        if (tok->independent || tok->dx)
            fail("expected a jet variable", at);
        return tok->var;
    }

    std::size_t pos() const noexcept { return i_; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i_); }
    [[noreturn]] static void fail(const std::string& msg, std::size_t at) { throw ParseError(msg, at); }

private:
    struct Ident
    {
        JetVar var;
        bool independent = false; // t or x
        bool dx = false;
        Var which = Var::x;
    };

    char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }

    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }

    static bool alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
    static bool alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
    static bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

    std::optional<Ident> identifier()
    {
        if (!alpha(peek()))
            return std::nullopt;
        const std::size_t start = i_;
        while (alnum(peek()))
            ++i_;
        Ident id;
        const std::string name = s_.substr(start, i_ - start);
        if (peek() == '_') {
            ++i_;
            const std::size_t sfx = i_;
            int nt = 0, nx = 0;
            while (peek() == 't' || peek() == 'x') {
                if (peek() == 't') {
                    if (nx > 0)
                        fail("t derivatives go before x derivatives");
                    ++nt;
                } else {
                    ++nx;
                }
                ++i_;
            }
            if (i_ == sfx)
                fail("expected jet suffix of t and x");
            if (alnum(peek()) || peek() == '_')
                fail("bad jet suffix");
            if (name == "t" || name == "x" || name == "Dx")
                fail("'" + name + "' cannot carry a jet suffix", start);
            id.var = JetVar{name, nt, nx};
            return id;
        }
        if (name == "t" || name == "x") {
            id.independent = true;
            id.which = name == "t" ? Var::t : Var::x;
        } else if (name == "Dx") {
            id.dx = true;
        } else {
            id.var = JetVar{name, 0, 0};
        }
        return id;
    }

    Rational integer()
    {
        const std::size_t start = i_;
        while (digit(peek()))
            ++i_;
        return Rational(mpz_class(s_.substr(start, i_ - start)));
    }

    unsigned exponent()
    {
        skip();
        if (!digit(peek()))
            fail("expected a non-negative integer exponent");
        const std::size_t start = i_;
        const Rational e = integer();
        if (e > 4096)
            fail("exponent too large", start);
        return static_cast<unsigned>(e.get_num().get_ui());
    }

    Value term()
    {
        Value v = factor();
        for (;;) {
            skip();
            const char c = peek();
            if (c != '*' && c != '/')
                return v;
            const std::size_t at = i_;
            ++i_;
            Value r = factor();
            v = c == '*' ? mul(std::move(v), std::move(r)) : div(std::move(v), std::move(r), at);
        }
    }

    Value factor()
    {
        Value b = base();
        skip();
        if (peek() != '^')
            return b;
        ++i_;
        const unsigned k = exponent();
        if (b.op) {
            check_order(static_cast<long>(b.op->order()) * k, b.pos);
            b.op = power(*b.op, k);
        } else {
            b.jet = b.jet.pow(k);
        }
        return b;
    }

    Value base()
    {
        skip();
        Value v;
        v.pos = i_;
        const char c = peek();
        if (c == '(') {
            ++i_;
            v = expr();
            expect(')');
            return v;
        }
        if (c == '-') {
            ++i_;
            v = factor();
            if (v.op)
                v.op = -*v.op;
            else
                v.jet = -v.jet;
            return v;
        }
        if (digit(c)) {
            v.jet = JetPoly(RatFun(Poly(integer())));
            return v;
        }
        const auto id = identifier();
        if (!id) {
            if (c == '\0')
                fail("unexpected end of input");
            fail("unexpected '" + std::string(1, c) + "'");
        }
        if (id->independent) {
            v.jet = JetPoly(id->which == Var::t ? RatFun::t() : RatFun::x());
        } else if (id->dx) {
            if (mode_ != Mode::op)
                fail("Dx is only allowed in operators", v.pos);
            v.op = XDiffOp::dx();
        } else {
            if (mode_ != Mode::jet)
                fail("unexpected jet variable '" + id->var.str() + "'", v.pos);
            v.jet = JetPoly::var(id->var);
        }
        return v;
    }

    static RatFun scalar_of(const Value& v)
    {
        if (!v.jet.is_jet_free())
            fail("expected a function of t and x", v.pos);
        return v.jet.jet_free_part();
    }

    static XDiffOp to_op(const Value& v) { return v.op ? *v.op : XDiffOp::mult(scalar_of(v)); }

    Value add(Value a, Value b, bool minus)
    {
        if (a.op || b.op) {
            XDiffOp l = to_op(a);
            const XDiffOp r = to_op(b);
            a.op = minus ? l - r : l + r;
            a.jet = JetPoly();
        } else {
            a.jet = minus ? a.jet - b.jet : a.jet + b.jet;
        }
        return a;
    }

    Value mul(Value a, Value b)
    {
        if (a.op || b.op) {
            const XDiffOp l = to_op(a);
            const XDiffOp r = to_op(b);
            check_order(static_cast<long>(l.order()) + r.order(), a.pos);
            a.op = compose(l, r);
            a.jet = JetPoly();
        } else {
            a.jet = a.jet * b.jet;
        }
        return a;
    }

    Value div(Value a, const Value& b, std::size_t at)
    {
        if (b.op)
            fail("cannot divide by an operator", b.pos);
        const RatFun d = scalar_of(b);
        if (d.is_zero())
            fail("division by zero", at);
        if (a.op)
            a.op = compose(*a.op, XDiffOp::mult(RatFun(1) / d));
        else
            a.jet = a.jet / d;
        return a;
    }

    void check_order(long order, std::size_t) const
    {
        if (opts_.max_order > 0 && order > opts_.max_order)
            throw OrderLimitExceeded(static_cast<int>(order), opts_.max_order);
    }

    const std::string& s_;
    Mode mode_;
    ParseOptions opts_;
    std::size_t i_ = 0;
};

Value parse_all(const std::string& text, Mode mode, const ParseOptions& opts = {})
{
    Parser p(text, mode, opts);
    Value v = p.expr();
    p.expect_end();
    return v;
}

} // namespace

RatFun parse_ratfun(const std::string& text)
{
    const Value v = parse_all(text, Mode::scalar);
    return v.jet.jet_free_part();
}

JetPoly parse_jetpoly(const std::string& text)
{
    return parse_all(text, Mode::jet).jet;
}

XDiffOp parse_operator(const std::string& text, const ParseOptions& opts)
{
    const Value v = parse_all(text, Mode::op, opts);
    const XDiffOp l = v.op ? *v.op : XDiffOp::mult(v.jet.jet_free_part());
    if (opts.max_order > 0 && l.order() > opts.max_order)
        throw OrderLimitExceeded(l.order(), opts.max_order);
    return l;
}

EvolutionEq parse_equation(const std::string& text, const ParseOptions& opts)
{
    Parser p(text, Mode::jet, opts);
    const std::size_t lhs_at = p.pos();
    const JetVar lhs = p.jet_var();
    if (lhs.t_order != 1 || lhs.x_order != 0)
        Parser::fail("left side must be a t-derivative like u_t", lhs_at);
    p.expect('=');
    const JetPoly rhs = p.expr().jet;
    p.expect_end();

    const auto c = linear_coefficients(rhs, lhs.dep);
    if (!c)
        throw NotLinear(rhs.str());
    if (c->empty())
        throw LeadingCoefficientZero();
    const int order = static_cast<int>(c->size()) - 1;
    if (opts.max_order > 0 && order > opts.max_order)
        throw OrderLimitExceeded(order, opts.max_order);
    return EvolutionEq(lhs.dep, *c);
}

} // namespace potframe
