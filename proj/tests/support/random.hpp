#ifndef POTFRAME_TESTS_RANDOM_HPP
#define POTFRAME_TESTS_RANDOM_HPP

// Seeded generators of sparse random values for property tests.

#include "potframe/conslaw.hpp"
#include "potframe/diffop.hpp"
#include "potframe/jet.hpp"
#include "potframe/ratfun.hpp"

#include <random>
#include <string>
#include <vector>

namespace potframe::testing {

class Gen
{
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    template <class T>
    const T& pick(const std::vector<T>& xs)
    {
        return xs[static_cast<std::size_t>(integer(0, static_cast<int>(xs.size()) - 1))];
    }

    Rational rational(int span = 5)
    {
        int n = 0;
        while (n == 0)
            n = integer(-span, span);
        Rational q(n, integer(1, 3));
        q.canonicalize();
        return q;
    }

    Poly poly(int max_deg = 2, int max_terms = 3)
    {
        Poly p;
        const int terms = integer(1, max_terms);
        for (int k = 0; k < terms; ++k) {
            const int dt = integer(0, max_deg);
            const int dx = integer(0, max_deg - dt);
            p += Poly::monomial(rational(), dt, dx);
        }
        return p;
    }

    // Sparse rational function with a denominator from a small family.
    RatFun ratfun(bool allow_denominator = true)
    {
        RatFun num = RatFun(poly());
        if (!allow_denominator || coin(0.5))
            return num;
        static const std::vector<RatFun> dens = {
            RatFun::x(),
            RatFun::x() * RatFun::x(),
            RatFun::x() + RatFun(1),
            RatFun::t() + RatFun(2),
            RatFun::x() + RatFun::t(),
            RatFun::x() - RatFun(3),
        };
        return num / pick(dens);
    }

    RatFun nonzero_ratfun(bool allow_denominator = true)
    {
        RatFun f;
        while (f.is_zero())
            f = ratfun(allow_denominator);
        return f;
    }

    std::vector<RatFun> ratfuns(std::size_t n, double zero_probability = 0.0)
    {
        std::vector<RatFun> out;
        for (std::size_t i = 0; i < n; ++i)
            out.push_back(coin(zero_probability) ? RatFun() : ratfun());
        return out;
    }

    XDiffOp op(int max_order = 3, bool allow_denominator = true)
    {
        const int order = integer(0, max_order);
        std::vector<RatFun> c;
        for (int k = 0; k < order; ++k)
            c.push_back(coin(0.3) ? RatFun() : ratfun(allow_denominator));
        c.push_back(nonzero_ratfun(allow_denominator));
        return XDiffOp(c);
    }

    EvolutionEq equation(int n, const std::string& dep = "u")
    {
        std::vector<RatFun> a;
        for (int i = 0; i < n; ++i)
            a.push_back(coin(0.4) ? RatFun() : ratfun());
        a.push_back(nonzero_ratfun());
        return EvolutionEq(dep, a);
    }

    JetVar jet_var(const std::vector<std::string>& deps, int max_x = 3, int max_t = 0)
    {
        return JetVar{pick(deps), integer(0, max_t), integer(0, max_x)};
    }

    JetPoly jet_poly(const std::vector<std::string>& deps, int max_x = 3, int max_t = 0, int max_terms = 3,
                     int max_degree = 2)
    {
        JetPoly p;
        const int terms = integer(1, max_terms);
        for (int k = 0; k < terms; ++k) {
            JetPoly m(ratfun());
            const int deg = integer(0, max_degree);
            for (int d = 0; d < deg; ++d)
                m *= JetPoly::var(jet_var(deps, max_x, max_t));
            p += m;
        }
        return p;
    }

private:
    std::mt19937 rng_;
};

} // namespace potframe::testing

#endif // POTFRAME_TESTS_RANDOM_HPP
