#pragma once

#include <stdexcept>
#include <string>

namespace necklace {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuiverMismatch : Error {
    QuiverMismatch() : Error("elements live over different quivers") {}
};

struct NameCollision : Error {
    explicit NameCollision(const std::string& name)
        : Error("edge name already ends in '*': " + name) {}
};

struct NonComposablePath : Error {
    using Error::Error;
};

struct UnknownEdge : Error {
    explicit UnknownEdge(const std::string& name) : Error("unknown edge: " + name) {}
};

struct ParseError : Error {
    size_t pos;
    ParseError(const std::string& what, size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), pos(position) {}
};

struct DegreeZero : Error {
    DegreeZero() : Error("contraction requires a form of degree >= 1") {}
};

struct SingularConstantTerm : Error {
    SingularConstantTerm() : Error("constant term of the series is not invertible") {}
};

struct TruncationExceeded : Error {
    using Error::Error;
};

struct TooLarge : Error {
    using Error::Error;
};

struct NotClosed : Error {
    NotClosed() : Error("2-form is not closed in the de Rham quotient") {}
};

struct NoSolution : Error {
    using Error::Error;
};

struct NotFreeAlgebra : Error {
    using Error::Error;
};

struct ShapeMismatch : Error {
    using Error::Error;
};

struct DeformedUnsupported : Error {
    DeformedUnsupported() : Error("operation requires the undeformed quotient (c = 0)") {}
};

struct ConfigError : Error {
    using Error::Error;
};

struct Precondition : Error {
    using Error::Error;
};

}  // namespace necklace
