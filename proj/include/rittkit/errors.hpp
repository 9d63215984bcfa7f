#pragma once

#include <stdexcept>
#include <string>

namespace rittkit {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation that needs a leader was given a polynomial without one
// (a constant, or an element of the coefficient ring).
struct ConstantPolynomialError : Error {
    using Error::Error;
};

// Reduction/chevalley machinery requires characteristic 0.
struct UnsupportedCharacteristicError : Error {
    using Error::Error;
};

// Operands live in different rings.
struct RingMismatchError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

// Witness construction was asked about the zero element.
struct ZeroTargetError : Error {
    using Error::Error;
};

// A specialization is undefined on a needed coefficient symbol.
struct SpecializationDomainError : Error {
    using Error::Error;
};

struct EmptyInputError : Error {
    using Error::Error;
};

// Difference-ring predicates reject zero and units.
struct UnitOrZeroInputError : Error {
    using Error::Error;
};

// Input is outside the supported desk-scale range (e.g. irreducibility
// testing above degree 4).
struct UnsupportedError : Error {
    using Error::Error;
};

// Parse-time errors carry a source position.
struct SyntaxError : Error {
    int line;
    int column;
    SyntaxError(const std::string& msg, int line_, int col_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(col_) + ")"),
          line(line_), column(col_) {}
};

struct UnknownVariableError : SyntaxError {
    using SyntaxError::SyntaxError;
};

struct DerivationIndexError : SyntaxError {
    using SyntaxError::SyntaxError;
};

}  // namespace rittkit
