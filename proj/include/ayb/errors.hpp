#pragma once

#include <stdexcept>
#include <string>

namespace ayb {

// Base for all library errors. Mathematical check failures are not errors;
// they come back as CheckReport data.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct SyntaxError : Error {
    size_t position;
    std::string expected;
    SyntaxError(size_t pos, const std::string& exp, const std::string& got)
        : Error("syntax error at position " + std::to_string(pos) + ": expected " + exp +
                ", got " + got),
          position(pos), expected(exp) {}
};

struct UnknownIndeterminate : Error {
    std::string name;
    explicit UnknownIndeterminate(const std::string& n)
        : Error("unknown indeterminate '" + n + "'"), name(n) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

struct MissingBinding : Error {
    std::string name;
    explicit MissingBinding(const std::string& n)
        : Error("no binding for indeterminate '" + n + "'"), name(n) {}
};

struct NotInvertible : Error {
    explicit NotInvertible(const std::string& what) : Error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct NotABimodule : Error {
    explicit NotABimodule(const std::string& what) : Error(what) {}
};

struct NotCoassociative : Error {
    explicit NotCoassociative(const std::string& witness)
        : Error("coproduct is not coassociative: " + witness) {}
};

struct NotDendriform : Error {
    explicit NotDendriform(const std::string& what) : Error(what) {}
};

struct NotSymmetric : Error {
    explicit NotSymmetric(const std::string& what) : Error(what) {}
};

struct NotAntisymmetric : Error {
    explicit NotAntisymmetric(const std::string& what) : Error(what) {}
};

struct NotAYBESolution : Error {
    explicit NotAYBESolution(const std::string& what) : Error(what) {}
};

struct NotDSolution : Error {
    explicit NotDSolution(const std::string& what) : Error(what) {}
};

struct NotMatchedPair : Error {
    explicit NotMatchedPair(const std::string& what) : Error(what) {}
};

struct NotAntisymmetricForm : Error {
    explicit NotAntisymmetricForm(const std::string& what) : Error(what) {}
};

struct DegenerateForm : Error {
    explicit DegenerateForm(const std::string& what) : Error(what) {}
};

struct NotACocycle : Error {
    explicit NotACocycle(const std::string& what) : Error(what) {}
};

struct UnsatisfiableConstraints : Error {
    explicit UnsatisfiableConstraints(const std::string& what) : Error(what) {}
};

struct SearchSpaceTooLarge : Error {
    explicit SearchSpaceTooLarge(const std::string& what) : Error(what) {}
};

struct UnknownFixture : Error {
    explicit UnknownFixture(const std::string& id) : Error("unknown fixture '" + id + "'") {}
};

struct ValidationFailed : Error {
    explicit ValidationFailed(const std::string& what) : Error(what) {}
};

struct IOError : Error {
    explicit IOError(const std::string& what) : Error(what) {}
};

} // namespace ayb
