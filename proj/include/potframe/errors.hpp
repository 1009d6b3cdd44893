#ifndef POTFRAME_ERRORS_HPP
#define POTFRAME_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace potframe {

// Base of every error raised by the library. Domain errors map to CLI exit 2.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error
{
public:
    DivisionByZero() : Error("division by the zero function") {}
};

class PoleError : public Error
{
public:
    explicit PoleError(const std::string& where) : Error("pole: denominator vanishes at " + where) {}
};

class PreconditionError : public Error
{
public:
    using Error::Error;
};

class MissingEquation : public Error
{
public:
    explicit MissingEquation(const std::string& dep)
        : Error("no evolution rule supplied for dependent '" + dep + "'")
    {}
};

class NotADivergence : public Error
{
public:
    NotADivergence(const std::string& residual)
        : Error("not a total x-derivative; residual: " + residual), residual_(residual)
    {}
    const std::string& residual() const noexcept { return residual_; }

private:
    std::string residual_;
};

class CircularRule : public Error
{
public:
    explicit CircularRule(const std::string& what) : Error("circular substitution rule: " + what) {}
};

class NotACosymmetry : public Error
{
public:
    explicit NotACosymmetry(const std::string& residual)
        : Error("not a cosymmetry; adjoint residual: " + residual), residual_(residual)
    {}
    const std::string& residual() const noexcept { return residual_; }

private:
    std::string residual_;
};

class NotACharacteristic : public Error
{
public:
    using Error::Error;
};

class NotASolution : public Error
{
public:
    explicit NotASolution(const std::string& what) : Error("seed is not a solution: " + what) {}
};

class DiagramBroken : public Error
{
public:
    explicit DiagramBroken(const std::string& leg) : Error("dual Darboux diagram broken at leg: " + leg), leg_(leg) {}
    const std::string& leg() const noexcept { return leg_; }

private:
    std::string leg_;
};

class ParseError : public Error
{
public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error("parse error at position " + std::to_string(pos) + ": " + msg), pos_(pos)
    {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

class NotLinear : public Error
{
public:
    explicit NotLinear(const std::string& what) : Error("equation is not linear: " + what) {}
};

class LeadingCoefficientZero : public Error
{
public:
    LeadingCoefficientZero() : Error("leading coefficient of the equation vanishes") {}
};

class OrderLimitExceeded : public Error
{
public:
    OrderLimitExceeded(int order, int limit)
        : Error("order " + std::to_string(order) + " exceeds POTFRAME_MAX_ORDER=" + std::to_string(limit))
    {}
};

class UnsupportedCoefficients : public Error
{
public:
    using Error::Error;
};

class InstabilityDetected : public Error
{
public:
    InstabilityDetected(std::size_t step, double time)
        : Error("solution norm exceeded 1e6 x initial at step " + std::to_string(step) +
                " (t = " + std::to_string(time) + ")"),
          step_(step)
    {}
    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

class IncompatibleDensity : public Error
{
public:
    using Error::Error;
};

} // namespace potframe

#endif // POTFRAME_ERRORS_HPP
