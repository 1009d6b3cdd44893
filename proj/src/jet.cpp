#include "potframe/jet.hpp"

#include "potframe/errors.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace potframe {

std::string JetVar::str() const
{
    if (t_order == 0 && x_order == 0)
        return dep;
    return dep + "_" + std::string(t_order, 't') + std::string(x_order, 'x');
}

namespace {

int monomial_degree(const JetMonomial& m)
{
    int d = 0;
    for (const auto& [v, e] : m)
        d += e;
    return d;
}

} // namespace

bool JetMonomialOrder::operator()(const JetMonomial& a, const JetMonomial& b) const
{
    const int da = monomial_degree(a), db = monomial_degree(b);
    if (da != db)
        return da > db;
    auto ia = a.rbegin(), ib = b.rbegin();
    for (; ia != a.rend() && ib != b.rend(); ++ia, ++ib) {
        if (ia->first != ib->first)
            return ia->first > ib->first;
        if (ia->second != ib->second)
            return ia->second > ib->second;
    }
    return ia != a.rend() && ib == b.rend();
}

JetMonomial monomial_multiply(const JetMonomial& a, const JetMonomial& b)
{
    JetMonomial r;
    r.reserve(a.size() + b.size());
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first))
            r.push_back(*ia++);
        else if (ia == a.end() || ib->first < ia->first)
            r.push_back(*ib++);
        else {
            r.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    return r;
}

namespace {

// m with one power of v removed (v must be present).
JetMonomial monomial_divide_var(const JetMonomial& m, const JetVar& v)
{
    JetMonomial r;
    r.reserve(m.size());
    for (const auto& [w, e] : m) {
        if (w == v) {
            if (e > 1)
                r.emplace_back(w, e - 1);
        } else
            r.emplace_back(w, e);
    }
    return r;
}

JetMonomial single(const JetVar& v, int e = 1)
{
    return JetMonomial{{v, e}};
}

} // namespace

JetPoly::JetPoly(const RatFun& c)
{
    if (!c.is_zero())
        terms_.emplace(JetMonomial{}, c);
}

JetPoly JetPoly::var(const JetVar& v)
{
    JetPoly p;
    p.terms_.emplace(single(v), RatFun(1));
    return p;
}

JetPoly JetPoly::term(const RatFun& c, JetMonomial m)
{
    JetPoly p;
    p.add_term(m, c);
    return p;
}

void JetPoly::add_term(const JetMonomial& m, const RatFun& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

bool JetPoly::is_jet_free() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

RatFun JetPoly::jet_free_part() const
{
    auto it = terms_.find(JetMonomial{});
    return it == terms_.end() ? RatFun() : it->second;
}

std::set<JetVar> JetPoly::variables() const
{
    std::set<JetVar> vs;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m)
            vs.insert(v);
    return vs;
}

std::set<std::string> JetPoly::dependents() const
{
    std::set<std::string> ds;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m)
            ds.insert(v.dep);
    return ds;
}

bool JetPoly::contains(const JetVar& v) const
{
    return degree_in(v) > 0;
}

int JetPoly::degree_in(const JetVar& v) const
{
    int d = 0;
    for (const auto& [m, c] : terms_)
        for (const auto& [w, e] : m)
            if (w == v)
                d = std::max(d, e);
    return d;
}

JetPoly JetPoly::coefficient(const JetVar& v, int e) const
{
    JetPoly r;
    for (const auto& [m, c] : terms_) {
        int have = 0;
        JetMonomial rest;
        for (const auto& [w, k] : m) {
            if (w == v)
                have = k;
            else
                rest.emplace_back(w, k);
        }
        if (have == e)
            r.add_term(rest, c);
    }
    return r;
}

JetPoly JetPoly::partial(const JetVar& v) const
{
    JetPoly r;
    for (const auto& [m, c] : terms_)
        for (const auto& [w, e] : m)
            if (w == v)
                r.add_term(monomial_divide_var(m, v), c * RatFun(e));
    return r;
}

JetPoly& JetPoly::operator+=(const JetPoly& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

JetPoly& JetPoly::operator-=(const JetPoly& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

JetPoly operator*(const JetPoly& a, const JetPoly& b)
{
    JetPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(monomial_multiply(ma, mb), ca * cb);
    return r;
}

JetPoly& JetPoly::operator*=(const JetPoly& o)
{
    *this = *this * o;
    return *this;
}

JetPoly& JetPoly::operator*=(const RatFun& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= c;
    return *this;
}

JetPoly JetPoly::operator-() const
{
    JetPoly r = *this;
    for (auto& [m, v] : r.terms_)
        v = -v;
    return r;
}

JetPoly JetPoly::pow(unsigned k) const
{
    JetPoly r(1);
    for (unsigned i = 0; i < k; ++i)
        r *= *this;
    return r;
}

std::string JetPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string tail;
        for (const auto& [v, e] : m) {
            if (!tail.empty())
                tail += "*";
            tail += v.str();
            if (e > 1)
                tail += "^" + std::to_string(e);
        }
        const auto [neg, body] = render_scaled(c, tail);
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += body;
        first = false;
    }
    return out;
}

namespace {

// Shared Leibniz walk: coefficient derivative plus each factor replaced by `bump(v)`.
JetPoly derive(const JetPoly& p, Var coeff_var, const std::function<JetPoly(const JetVar&)>& bump)
{
    JetPoly r;
    for (const auto& [m, c] : p.terms()) {
        r.add_term(m, c.deriv(coeff_var));
        for (const auto& [v, e] : m) {
            const JetPoly rest = JetPoly::term(c * RatFun(e), monomial_divide_var(m, v));
            r += rest * bump(v);
        }
    }
    return r;
}

} // namespace

JetPoly total_x(const JetPoly& p)
{
    return derive(p, Var::x, [](const JetVar& v) { return JetPoly::var(v.dx()); });
}

JetPoly total_x(const JetPoly& p, int k)
{
    JetPoly r = p;
    for (int i = 0; i < k; ++i)
        r = total_x(r);
    return r;
}

JetPoly total_t_free(const JetPoly& p)
{
    return derive(p, Var::t, [](const JetVar& v) { return JetPoly::var(v.dt()); });
}

JetPoly total_t_onshell(const JetPoly& p, const EvolutionRules& rules)
{
    std::map<JetVar, JetPoly> cache;
    auto replacement = [&](const JetVar& v) -> JetPoly {
        if (v.t_order > 0)
            throw PreconditionError("on-shell D_t needs x-jets only, got " + v.str());
        auto rule = rules.find(v.dep);
        if (rule == rules.end())
            throw MissingEquation(v.dep);
        auto it = cache.find(v);
        if (it != cache.end())
            return it->second;
        JetPoly r = total_x(rule->second, v.x_order);
        cache.emplace(v, r);
        return r;
    };
    return derive(p, Var::t, replacement);
}

JetPoly euler(const JetPoly& p, const std::string& dep)
{
    JetPoly result;
    for (const JetVar& v : p.variables()) {
        if (v.dep != dep)
            continue;
        JetPoly q = p.partial(v);
        for (int i = 0; i < v.t_order; ++i)
            q = -total_t_free(q);
        for (int j = 0; j < v.x_order; ++j)
            q = -total_x(q);
        result += q;
    }
    return result;
}

namespace {

// Highest coordinate by x-order, ties broken by the coordinate order.
bool top_variable(const JetPoly& p, JetVar& out)
{
    bool found = false;
    for (const JetVar& v : p.variables()) {
        if (!found || v.x_order > out.x_order || (v.x_order == out.x_order && out < v)) {
            out = v;
            found = true;
        }
    }
    return found;
}

// Polynomial antiderivative of a in the coordinate w.
JetPoly antiderivative(const JetPoly& a, const JetVar& w)
{
    JetPoly r;
    for (const auto& [m, c] : a.terms()) {
        int e = 0;
        for (const auto& [v, k] : m)
            if (v == w)
                e = k;
        r.add_term(monomial_multiply(m, single(w)), c / RatFun(e + 1));
    }
    return r;
}

} // namespace

JetPoly integrate_x(const JetPoly& p)
{
    for (const std::string& d : p.dependents()) {
        if (!euler(p, d).is_zero())
            throw NotADivergence(p.str());
    }
    JetPoly residual = p;
    JetPoly result;
    JetVar top;
    constexpr int max_steps = 100000;
    for (int step = 0; top_variable(residual, top); ++step) {
        if (step == max_steps)
            throw NotADivergence(residual.str());
        if (top.x_order == 0 || residual.degree_in(top) > 1)
            throw NotADivergence(residual.str());
        const JetPoly a = residual.coefficient(top, 1);
        for (const JetVar& v : a.variables())
            if (v.x_order >= top.x_order)
                throw NotADivergence(residual.str());
        const JetPoly piece = antiderivative(a, top.dx(-1));
        result += piece;
        residual -= total_x(piece);
    }
    if (!residual.is_zero())
        result += JetPoly(integrate_rational_x(residual.jet_free_part()));
    return result;
}

namespace {

// Coefficients of p as a polynomial in x; entry j is a polynomial in t.
std::vector<Poly> x_coefficients(const Poly& p)
{
    std::vector<Poly> cs(p.degree_x() + 1);
    for (const auto& [m, c] : p.terms())
        cs[m.x] += Poly::monomial(c, m.t, 0);
    return cs;
}

// Solves M u = b over Q(t, x). Returns false when inconsistent.
bool solve_linear(std::vector<std::vector<RatFun>> m, std::vector<RatFun> b, std::vector<RatFun>& u)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c].is_zero())
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[piv], m[r]);
        std::swap(b[piv], b[r]);
        const RatFun inv = RatFun(1) / m[r][c];
        for (std::size_t k = c; k < cols; ++k)
            m[r][k] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero())
                continue;
            const RatFun f = m[i][c];
            for (std::size_t k = c; k < cols; ++k)
                m[i][k] -= f * m[r][k];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!b[i].is_zero())
            return false;
    u.assign(cols, RatFun());
    for (std::size_t i = 0; i < r; ++i)
        u[pivot_col[i]] = b[i];
    return true;
}

Poly x_power(int j)
{
    return Poly::monomial(1, 0, j);
}

} // namespace

RatFun integrate_rational_x(const RatFun& f)
{
    if (f.is_zero())
        return RatFun();
    // Split den = c(t) * e(t, x) with e primitive in x.
    Poly content;
    for (const Poly& c : x_coefficients(f.den()))
        content = gcd(content, c);
    const Poly e = exact_div(f.den(), content);
    const RatFun scale = RatFun(Poly(1), content);

    if (e.degree_x() == 0) {
        RatFun g;
        const auto cs = x_coefficients(f.num());
        for (std::size_t j = 0; j < cs.size(); ++j)
            g += RatFun(cs[j] * x_power(static_cast<int>(j) + 1)) / RatFun(static_cast<long>(j + 1));
        return g * scale / RatFun(e);
    }

    // Horowitz-Ostrogradsky: f = S' + (P/e1)' + R/e2 with e1 = gcd(e, e_x), e2 = e/e1.
    const Poly e1 = gcd(e, e.deriv_x());
    const Poly e2 = exact_div(e, e1);
    const Poly h = exact_div(e1.deriv_x() * e2, e1);
    const int deg_e = e.degree_x();
    const int deg_e1 = e1.degree_x();
    const int deg_e2 = e2.degree_x();
    const int deg_n = f.num().degree_x();
    const int deg_s = std::max(0, deg_n - deg_e + 1);

    std::vector<Poly> images;
    for (int j = 1; j <= deg_s; ++j)
        images.push_back(x_power(j - 1) * Rational(j) * e);
    for (int j = 0; j < deg_e1; ++j)
        images.push_back(x_power(j).deriv_x() * e2 - x_power(j) * h);
    for (int j = 0; j < deg_e2; ++j)
        images.push_back(x_power(j) * e1);

    int rows = deg_n + 1;
    for (const Poly& img : images)
        rows = std::max(rows, img.degree_x() + 1);
    std::vector<std::vector<RatFun>> m(rows, std::vector<RatFun>(images.size()));
    for (std::size_t k = 0; k < images.size(); ++k) {
        const auto cs = x_coefficients(images[k]);
        for (std::size_t j = 0; j < cs.size(); ++j)
            m[j][k] = RatFun(cs[j]);
    }
    std::vector<RatFun> b(rows);
    {
        const auto cs = x_coefficients(f.num());
        for (std::size_t j = 0; j < cs.size(); ++j)
            b[j] = RatFun(cs[j]) * scale;
    }
    std::vector<RatFun> u;
    if (!solve_linear(m, b, u))
        throw NotADivergence(f.str());
    for (int j = 0; j < deg_e2; ++j)
        if (!u[deg_s + deg_e1 + j].is_zero())
            throw NotADivergence(f.str());

    RatFun g;
    for (int j = 1; j <= deg_s; ++j)
        g += u[j - 1] * RatFun(x_power(j));
    RatFun p;
    for (int j = 0; j < deg_e1; ++j)
        p += u[deg_s + j] * RatFun(x_power(j));
    return g + p / RatFun(e1);
}

JetPoly substitute(const JetPoly& p, const SubstitutionRules& rules, bool close_under_dx)
{
    // The rule that rewrites v, if any: exact match, or under closure the
    // rule of the same chain with the largest order not exceeding v's.
    auto rule_for = [&](const JetVar& v) -> const std::pair<const JetVar, JetPoly>* {
        auto exact = rules.find(v);
        if (exact != rules.end())
            return &*exact;
        if (!close_under_dx)
            return nullptr;
        const std::pair<const JetVar, JetPoly>* best = nullptr;
        for (const auto& r : rules)
            if (r.first.dep == v.dep && r.first.t_order == v.t_order && r.first.x_order <= v.x_order &&
                (!best || r.first.x_order > best->first.x_order))
                best = &r;
        return best;
    };

    // Static cycle check on the rule graph.
    std::map<JetVar, int> state;
    std::function<void(const JetVar&)> visit = [&](const JetVar& key) {
        state[key] = 1;
        for (const JetVar& v : rules.at(key).variables()) {
            const auto* r = rule_for(v);
            if (!r)
                continue;
            const int s = state[r->first];
            if (s == 1)
                throw CircularRule(key.str() + " -> " + r->first.str());
            if (s == 0)
                visit(r->first);
        }
        state[key] = 2;
    };
    for (const auto& [key, rhs] : rules)
        if (state[key] == 0)
            visit(key);

    std::map<JetVar, JetPoly> cache;
    auto replacement = [&](const JetVar& v, const std::pair<const JetVar, JetPoly>& r) {
        auto it = cache.find(v);
        if (it != cache.end())
            return it->second;
        JetPoly rep = total_x(r.second, v.x_order - r.first.x_order);
        cache.emplace(v, rep);
        return rep;
    };

    constexpr int max_passes = 256;
    JetPoly cur = p;
    for (int pass = 0; pass < max_passes; ++pass) {
        bool changed = false;
        JetPoly next;
        for (const auto& [m, c] : cur.terms()) {
            JetPoly prod(c);
            JetMonomial kept;
            for (const auto& [v, e] : m) {
                const auto* r = rule_for(v);
                if (!r) {
                    kept.emplace_back(v, e);
                    continue;
                }
                changed = true;
                prod *= replacement(v, *r).pow(static_cast<unsigned>(e));
            }
            next += prod * JetPoly::term(RatFun(1), kept);
        }
        cur = std::move(next);
        if (!changed)
            return cur;
    }
    throw CircularRule("rewriting did not terminate");
}

std::optional<std::vector<RatFun>> linear_coefficients(const JetPoly& p, const std::string& dep)
{
    std::vector<RatFun> c;
    for (const auto& [m, coef] : p.terms()) {
        if (m.size() != 1 || m[0].second != 1)
            return std::nullopt;
        const JetVar& v = m[0].first;
        if (v.dep != dep || v.t_order != 0)
            return std::nullopt;
        if (static_cast<int>(c.size()) <= v.x_order)
            c.resize(static_cast<std::size_t>(v.x_order) + 1);
        c[static_cast<std::size_t>(v.x_order)] = coef;
    }
    return c;
}

} // namespace potframe
