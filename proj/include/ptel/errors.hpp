#pragma once

#include <stdexcept>
#include <string>

namespace ptel {

/// How a failure maps onto the command-line exit status.
enum class ErrorKind {
    MathNegative = 1,  // a mathematical "no" (e.g. no parallel telescoper)
    Input = 2,         // malformed or inadmissible input
    Internal = 3,      // invariant breach; indicates a bug
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

#define PTEL_DEFINE_ERROR(Name, Kind)                                           \
    class Name : public Error {                                                 \
    public:                                                                     \
        explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {} \
    }

PTEL_DEFINE_ERROR(DivisionByZero, Input);
PTEL_DEFINE_ERROR(ZeroPolynomial, Input);
PTEL_DEFINE_ERROR(DivisorZero, Input);
PTEL_DEFINE_ERROR(OperandZero, Input);
PTEL_DEFINE_ERROR(MultiPartElement, Input);
PTEL_DEFINE_ERROR(NotCompatible, Input);
PTEL_DEFINE_ERROR(CrossClassNonzero, Input);
PTEL_DEFINE_ERROR(IncompatibleSystem, Input);
PTEL_DEFINE_ERROR(UnknownVariable, Input);
PTEL_DEFINE_ERROR(InputError, Input);
PTEL_DEFINE_ERROR(NoParallelTelescoperExists, MathNegative);
PTEL_DEFINE_ERROR(InvariantBreach, Internal);
PTEL_DEFINE_ERROR(XFreenessViolated, Internal);
PTEL_DEFINE_ERROR(MaxOrderExceeded, Internal);

#undef PTEL_DEFINE_ERROR

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& msg, int line, int column)
        : Error(ErrorKind::Input, std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace ptel
