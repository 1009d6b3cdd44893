#include "potframe/poly.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace potframe {

std::string to_string(const Rational& q)
{
    return q.get_str();
}

namespace {

// mpq_class(n, d) is not reduced on construction; GMP arithmetic assumes it is.
Rational canonical(const Rational& c)
{
    Rational r = c;
    r.canonicalize();
    return r;
}

} // namespace

Poly::Poly(const Rational& c)
{
    if (c != 0)
        terms_.emplace(Monomial{0, 0}, canonical(c));
}

Poly Poly::monomial(const Rational& c, int t_deg, int x_deg)
{
    Poly p;
    if (c != 0)
        p.terms_.emplace(Monomial{t_deg, x_deg}, canonical(c));
    return p;
}

bool Poly::is_constant() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

bool Poly::is_unit_power() const noexcept
{
    if (terms_.size() != 1)
        return false;
    const auto& [m, c] = *terms_.begin();
    return c == 1 && ((m.t > 0) != (m.x > 0));
}

Monomial Poly::leading_monomial() const
{
    if (terms_.empty())
        throw std::logic_error("leading monomial of zero polynomial");
    return terms_.begin()->first;
}

const Rational& Poly::leading_coefficient() const
{
    if (terms_.empty())
        throw std::logic_error("leading coefficient of zero polynomial");
    return terms_.begin()->second;
}

Rational Poly::constant_term() const
{
    auto it = terms_.find(Monomial{0, 0});
    return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::degree_t() const noexcept
{
    int d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.t);
    return d;
}

int Poly::degree_x() const noexcept
{
    int d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.x);
    return d;
}

int Poly::total_degree() const noexcept
{
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

void Poly::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    const Rational cc = canonical(c);
    auto [it, inserted] = terms_.try_emplace(m, cc);
    if (!inserted) {
        it->second += cc;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(Monomial{ma.t + mb.t, ma.x + mb.x}, ca * cb);
    return r;
}

Poly& Poly::operator*=(const Poly& o)
{
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    const Rational cc = canonical(c);
    for (auto& [m, v] : terms_)
        v *= cc;
    return *this;
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& [m, v] : r.terms_)
        v = -v;
    return r;
}

Poly Poly::deriv_t() const
{
    Poly r;
    for (const auto& [m, c] : terms_)
        if (m.t > 0)
            r.add_term(Monomial{m.t - 1, m.x}, c * m.t);
    return r;
}

Poly Poly::deriv_x() const
{
    Poly r;
    for (const auto& [m, c] : terms_)
        if (m.x > 0)
            r.add_term(Monomial{m.t, m.x - 1}, c * m.x);
    return r;
}

Poly Poly::pow(unsigned k) const
{
    Poly result(1);
    Poly base = *this;
    while (k > 0) {
        if (k & 1u)
            result *= base;
        k >>= 1u;
        if (k > 0)
            base *= base;
    }
    return result;
}

namespace {

Rational rational_pow(const Rational& b, int e)
{
    Rational r = 1;
    for (int i = 0; i < e; ++i)
        r *= b;
    return r;
}

} // namespace

Rational Poly::eval(const Rational& t0, const Rational& x0) const
{
    Rational sum = 0;
    for (const auto& [m, c] : terms_)
        sum += c * rational_pow(t0, m.t) * rational_pow(x0, m.x);
    return sum;
}

Poly Poly::monic() const
{
    if (terms_.empty())
        return *this;
    Rational inv = 1 / leading_coefficient();
    Poly r = *this;
    r *= inv;
    return r;
}

std::string Poly::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        const Rational mag = abs(c);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;

        std::string mono;
        auto power = [](const char* v, int e) {
            return e == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(e);
        };
        if (m.t > 0)
            mono += power("t", m.t);
        if (m.x > 0)
            mono += (mono.empty() ? "" : "*") + power("x", m.x);

        if (mono.empty())
            out += to_string(mag);
        else if (mag == 1)
            out += mono;
        else
            out += to_string(mag) + "*" + mono;
    }
    return out;
}

namespace {

// Quotient a / b when b divides a, nothing otherwise.
std::optional<Poly> try_divide(const Poly& a, const Poly& b)
{
    if (b.is_constant())
        return a * Rational(1 / b.leading_coefficient());
    const Monomial lm = b.leading_monomial();
    const Rational lc = b.leading_coefficient();
    Poly q;
    Poly r = a;
    while (!r.is_zero()) {
        const Monomial m = r.leading_monomial();
        if (m.t < lm.t || m.x < lm.x)
            return std::nullopt;
        Poly step = Poly::monomial(r.leading_coefficient() / lc, m.t - lm.t, m.x - lm.x);
        q += step;
        r -= step * b;
    }
    return q;
}

} // namespace

Poly exact_div(const Poly& a, const Poly& b)
{
    if (b.is_zero())
        throw std::logic_error("exact_div by zero polynomial");
    auto q = try_divide(a, b);
    if (!q)
        throw std::logic_error("exact_div: divisor does not divide dividend");
    return *q;
}

namespace {

// Dense univariate polynomial in t; index = degree, no trailing zeros.
using UPoly = std::vector<Rational>;

void trim(UPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

int udeg(const UPoly& p)
{
    return static_cast<int>(p.size()) - 1;
}

UPoly umul(const UPoly& a, const UPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    UPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

UPoly usub(UPoly a, const UPoly& b)
{
    if (a.size() < b.size())
        a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim(a);
    return a;
}

// a = q*b + r with deg r < deg b.
std::pair<UPoly, UPoly> udivmod(UPoly a, const UPoly& b)
{
    if (b.empty())
        throw std::logic_error("univariate division by zero");
    UPoly q;
    const int db = udeg(b);
    if (udeg(a) >= db)
        q.assign(a.size() - b.size() + 1, Rational(0));
    while (!a.empty() && udeg(a) >= db) {
        const int s = udeg(a) - db;
        const Rational f = a.back() / b.back();
        q[s] = f;
        for (int i = 0; i <= db; ++i)
            a[i + s] -= f * b[i];
        trim(a);
    }
    trim(q);
    return {q, a};
}

UPoly umonic(UPoly p)
{
    if (p.empty())
        return p;
    const Rational inv = 1 / p.back();
    for (auto& c : p)
        c *= inv;
    return p;
}

// Monic remainder sequence keeps the rational coefficients small.
UPoly ugcd(UPoly a, UPoly b)
{
    if (a.empty())
        return umonic(std::move(b));
    a = umonic(std::move(a));
    b = umonic(std::move(b));
    while (!b.empty()) {
        if (udeg(b) == 0)
            return UPoly{Rational(1)};
        UPoly r = umonic(udivmod(std::move(a), b).second);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Polynomial in x with coefficients in Q[t]; index = x-degree.
using RPoly = std::vector<UPoly>;

void rtrim(RPoly& p)
{
    while (!p.empty() && p.back().empty())
        p.pop_back();
}

int rdeg(const RPoly& p)
{
    return static_cast<int>(p.size()) - 1;
}

RPoly to_rec(const Poly& p)
{
    RPoly r(p.degree_x() + 1);
    for (const auto& [m, c] : p.terms()) {
        auto& u = r[m.x];
        if (static_cast<int>(u.size()) <= m.t)
            u.resize(m.t + 1, Rational(0));
        u[m.t] = c;
    }
    rtrim(r);
    return r;
}

Poly from_rec(const RPoly& r)
{
    Poly p;
    for (std::size_t j = 0; j < r.size(); ++j)
        for (std::size_t i = 0; i < r[j].size(); ++i)
            p += Poly::monomial(r[j][i], static_cast<int>(i), static_cast<int>(j));
    return p;
}

UPoly content(const RPoly& r)
{
    // Low-degree coefficients first: the gcd usually collapses to 1 quickly.
    std::vector<const UPoly*> cs;
    for (const auto& c : r)
        if (!c.empty())
            cs.push_back(&c);
    std::sort(cs.begin(), cs.end(), [](const UPoly* a, const UPoly* b) { return a->size() < b->size(); });
    UPoly g;
    for (const UPoly* c : cs) {
        g = ugcd(std::move(g), *c);
        if (udeg(g) == 0)
            break;
    }
    return g;
}

RPoly primitive(const RPoly& r)
{
    const UPoly c = content(r);
    RPoly out;
    out.reserve(r.size());
    for (const auto& coef : r)
        out.push_back(udivmod(coef, c).first);
    // Fix the rational unit: leading t-coefficient of the leading x-coefficient is one.
    const Rational inv = 1 / out.back().back();
    for (auto& coef : out)
        for (auto& v : coef)
            v *= inv;
    return out;
}

RPoly prem(RPoly a, const RPoly& b)
{
    const int db = rdeg(b);
    const UPoly& lb = b.back();
    while (!a.empty() && rdeg(a) >= db) {
        const int s = rdeg(a) - db;
        const UPoly la = a.back();
        for (auto& coef : a)
            coef = umul(coef, lb);
        for (int i = 0; i <= db; ++i)
            a[i + s] = usub(a[i + s], umul(la, b[i]));
        rtrim(a);
    }
    return a;
}


// Heuristic gcd over Z: evaluate at a large integer, take the gcd of the
// images and read the answer back from its symmetric xi-adic digits. Any
// candidate is confirmed by trial division, so a failure only means falling
// back to the remainder sequence.
using ZUni = std::vector<mpz_class>;
using ZBi = std::vector<ZUni>; // index = x-degree, entries dense in t

void ztrim(ZUni& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

void ztrim(ZBi& p)
{
    while (!p.empty() && p.back().empty())
        p.pop_back();
}

mpz_class max_norm(const ZBi& p)
{
    mpz_class m = 0;
    for (const auto& c : p)
        for (const auto& v : c)
            if (abs(v) > m)
                m = abs(v);
    return m;
}

mpz_class max_norm(const ZUni& p)
{
    return max_norm(ZBi{p});
}

mpz_class eval_z(const ZUni& p, const mpz_class& xi)
{
    mpz_class r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        r = r * xi + *it;
    return r;
}

ZUni eval_z(const ZBi& p, const mpz_class& xi)
{
    ZUni r;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        if (r.size() < it->size())
            r.resize(it->size(), 0);
        for (auto& v : r)
            v *= xi;
        for (std::size_t i = 0; i < it->size(); ++i)
            r[i] += (*it)[i];
    }
    ztrim(r);
    return r;
}

// Symmetric residue in (-xi/2, xi/2].
mpz_class smod(const mpz_class& v, const mpz_class& xi)
{
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), xi.get_mpz_t());
    if (2 * r > xi)
        r -= xi;
    return r;
}

ZUni digits(mpz_class h, const mpz_class& xi)
{
    ZUni out;
    while (h != 0) {
        const mpz_class d = smod(h, xi);
        out.push_back(d);
        h = (h - d) / xi;
    }
    return out;
}

ZBi digits(ZUni h, const mpz_class& xi)
{
    ZBi out;
    while (!h.empty()) {
        ZUni d(h.size());
        for (std::size_t i = 0; i < h.size(); ++i) {
            d[i] = smod(h[i], xi);
            h[i] = (h[i] - d[i]) / xi;
        }
        ztrim(d);
        ztrim(h);
        out.push_back(std::move(d));
    }
    ztrim(out);
    return out;
}

Poly from_z(const ZBi& p)
{
    Poly r;
    for (std::size_t j = 0; j < p.size(); ++j)
        for (std::size_t i = 0; i < p[j].size(); ++i)
            if (p[j][i] != 0)
                r += Poly::monomial(Rational(p[j][i]), static_cast<int>(i), static_cast<int>(j));
    return r;
}

// Integer image of a rational polynomial, up to a rational unit.
ZBi to_z(const Poly& p)
{
    mpz_class l = 1;
    for (const auto& [m, c] : p.terms())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    ZBi r(static_cast<std::size_t>(p.degree_x() + 1));
    for (const auto& [m, c] : p.terms()) {
        auto& u = r[m.x];
        if (static_cast<int>(u.size()) <= m.t)
            u.resize(m.t + 1, 0);
        u[m.t] = c.get_num() * (l / c.get_den());
    }
    ztrim(r);
    return r;
}

mpz_class next_xi(const mpz_class& xi)
{
    mpz_class s = sqrt(sqrt(xi));
    return 73794 * xi * s / 27011;
}

mpz_class initial_xi(const mpz_class& nf, const mpz_class& lf, const mpz_class& ng, const mpz_class& lg)
{
    const mpz_class b = 2 * std::min(nf, ng) + 29;
    mpz_class xi = std::min(b, mpz_class(99 * sqrt(b)));
    const mpz_class alt = 2 * std::min(nf / abs(lf), ng / abs(lg)) + 2;
    return std::max(xi, alt);
}

constexpr int heuristic_tries = 6;

bool divides_z(const ZUni& h, const ZUni& f)
{
    return try_divide(from_z(ZBi{f}), from_z(ZBi{h})).has_value();
}

// Primitive, positive-leading gcd of two primitive univariate integer polynomials.
std::optional<ZUni> heu_uni(const ZUni& f, const ZUni& g)
{
    if (f.size() == 1 || g.size() == 1)
        return ZUni{1};
    mpz_class xi = initial_xi(max_norm(f), f.back(), max_norm(g), g.back());
    for (int i = 0; i < heuristic_tries; ++i, xi = next_xi(xi)) {
        const mpz_class ff = eval_z(f, xi), gg = eval_z(g, xi);
        if (ff == 0 || gg == 0)
            continue;
        mpz_class h;
        mpz_gcd(h.get_mpz_t(), ff.get_mpz_t(), gg.get_mpz_t());
        ZUni cand = digits(h, xi);
        if (cand.empty())
            continue;
        mpz_class c = 0;
        for (const auto& v : cand)
            mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), v.get_mpz_t());
        if (cand.back() < 0)
            c = -c;
        for (auto& v : cand)
            v /= c;
        if (divides_z(cand, f) && divides_z(cand, g))
            return cand;
    }
    return std::nullopt;
}

std::optional<Poly> heu_bi(const Poly& a, const Poly& b)
{
    const ZBi f = to_z(a), g = to_z(b);
    if (f.size() == 1 && g.size() == 1) {
        // Both pure in t.
        auto h = heu_uni(f[0], g[0]);
        if (!h)
            return std::nullopt;
        return from_z(ZBi{*h});
    }
    auto lc_norm = [](const ZBi& p) { return max_norm(p.back()); };
    mpz_class xi = initial_xi(max_norm(f), lc_norm(f), max_norm(g), lc_norm(g));
    for (int i = 0; i < heuristic_tries; ++i, xi = next_xi(xi)) {
        ZUni ff = eval_z(f, xi), gg = eval_z(g, xi);
        if (ff.empty() || gg.empty())
            continue;
        // Content over Z of the images.
        mpz_class cf = 0, cg = 0;
        for (const auto& v : ff)
            mpz_gcd(cf.get_mpz_t(), cf.get_mpz_t(), v.get_mpz_t());
        for (const auto& v : gg)
            mpz_gcd(cg.get_mpz_t(), cg.get_mpz_t(), v.get_mpz_t());
        for (auto& v : ff)
            v /= cf;
        for (auto& v : gg)
            v /= cg;
        if (ff.back() < 0)
            for (auto& v : ff)
                v = -v;
        if (gg.back() < 0)
            for (auto& v : gg)
                v = -v;
        auto h = heu_uni(ff, gg);
        if (!h)
            return std::nullopt;
        mpz_class c;
        mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
        for (auto& v : *h)
            v *= c;
        const ZBi cand = digits(*h, xi);
        if (cand.empty())
            continue;
        const Poly hp = from_z(cand);
        if (try_divide(a, hp) && try_divide(b, hp))
            return hp;
    }
    return std::nullopt;
}

} // namespace

Poly gcd(const Poly& a, const Poly& b)
{
    if (a.is_zero())
        return b.monic();
    if (b.is_zero())
        return a.monic();
    if (a.is_constant() || b.is_constant())
        return Poly(1);

    if (auto h = heu_bi(a, b))
        return h->monic();
    return prs_gcd(a, b);
}

Poly prs_gcd(const Poly& a, const Poly& b)
{
    if (a.is_zero())
        return b.monic();
    if (b.is_zero())
        return a.monic();
    if (a.is_constant() || b.is_constant())
        return Poly(1);

    RPoly ra = to_rec(a);
    RPoly rb = to_rec(b);
    const UPoly c = ugcd(content(ra), content(rb));
    RPoly pa = primitive(ra);
    RPoly pb = primitive(rb);
    if (rdeg(pa) < rdeg(pb))
        std::swap(pa, pb);
    while (!pb.empty()) {
        RPoly r = prem(pa, pb);
        pa = std::move(pb);
        pb = r.empty() ? RPoly{} : primitive(r);
    }
    for (auto& coef : pa)
        coef = umul(coef, c);
    return from_rec(pa).monic();
}

} // namespace potframe
