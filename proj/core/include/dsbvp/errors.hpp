#pragma once

#include <stdexcept>
#include <string>

namespace dsbvp {

// Root of the library's error hierarchy. Everything thrown on purpose
// derives from this, so callers can catch dsbvp::Error and still keep
// std::exception compatibility.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// An argument is outside its documented range (index, abscissa, order).
class OutOfRange : public Error {
public:
    using Error::Error;
};

// An argument has the wrong shape or an inconsistent size.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Matrix or right-hand side handed to the linear solver contains NaN/Inf.
class NonFiniteInput : public Error {
public:
    using Error::Error;
};

// Elimination hit a pivot below the floor, or the computed solution
// failed the residual acceptance check.
class SingularMatrix : public Error {
public:
    using Error::Error;
};

// A user-supplied coefficient or nonlinearity returned NaN/Inf.
class NonFiniteEvaluation : public Error {
public:
    using Error::Error;
};

// The iterate left the admissible region of f and the guard rejected it.
class DomainViolation : public Error {
public:
    using Error::Error;
};

// Problem definition is unusable: missing callables, or p/q not positive
// on the collocation grid.
class InvalidProblem : public Error {
public:
    using Error::Error;
};

// Mixed-condition data with a zero coefficient on y(1), which leaves the
// boundary value underdetermined.
class InvalidBoundaryCondition : public Error {
public:
    using Error::Error;
};

// Outer iteration used up its sweep budget without meeting the tolerance.
class NotConverged : public Error {
public:
    using Error::Error;
};

// No closed-form solution is stored for the requested benchmark case.
class NoExactSolution : public Error {
public:
    using Error::Error;
};

// The integral-form kernel does not exist for this problem family
// (the 1/p antiderivative diverges at the singular end under value
// conditions there).
class UnavailableKernel : public Error {
public:
    using Error::Error;
};

// An integrand came back NaN/Inf at a quadrature node.
class QuadratureNonFinite : public Error {
public:
    using Error::Error;
};

// Panel doubling stopped making progress before reaching the target
// accuracy.
class QuadratureNotConverged : public Error {
public:
    using Error::Error;
};

// An expression string failed to parse; position is the byte offset of
// the offending token.
class ExpressionError : public Error {
public:
    ExpressionError(const std::string& what_arg, size_t position)
        : Error(what_arg), position_(position) {}

    size_t position() const noexcept { return position_; }

private:
    size_t position_;
};

// Problem-description text could not be parsed; carries the line and the
// field it refers to.
class ParseError : public Error {
public:
    ParseError(const std::string& what_arg, int line, std::string field)
        : Error(what_arg), line_(line), field_(std::move(field)) {}

    int line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

private:
    int line_;
    std::string field_;
};

}  // namespace dsbvp
