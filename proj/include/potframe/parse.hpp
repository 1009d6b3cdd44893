#ifndef POTFRAME_PARSE_HPP
#define POTFRAME_PARSE_HPP

// Text forms of the payload types. Anything str() renders parses back to
// the same value.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' int)?
//   base   := int | 't' | 'x' | jetvar | 'Dx' | '(' expr ')' | '-' factor
//   jetvar := name ('_' t* x*)?
//
// No implicit multiplication. In operators '*' is composition and a
// function f stands for multiplication by f.

#include "potframe/conslaw.hpp"
#include "potframe/diffop.hpp"
#include "potframe/jet.hpp"
#include "potframe/ratfun.hpp"

#include <string>

namespace potframe {

struct ParseOptions
{
    // Largest operator or equation order accepted; 0 = no limit.
    int max_order = 0;
};

// All throw ParseError with the offending offset.
RatFun parse_ratfun(const std::string& text);
JetPoly parse_jetpoly(const std::string& text);
// Throws OrderLimitExceeded.
XDiffOp parse_operator(const std::string& text, const ParseOptions& opts = {});
// "u_t = <expr linear in u and its x-jets>". Throws NotLinear,
// LeadingCoefficientZero, PreconditionError (order < 2), OrderLimitExceeded.
EvolutionEq parse_equation(const std::string& text, const ParseOptions& opts = {});

} // namespace potframe

#endif // POTFRAME_PARSE_HPP
