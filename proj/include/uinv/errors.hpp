#pragma once

#include <stdexcept>
#include <string>

namespace uinv {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// A polynomial was evaluated at a point that does not assign one of its variables.
class MissingAssignment : public Error {
public:
    using Error::Error;
};

/// Corner-minor order out of range.
class BadOrder : public Error {
public:
    using Error::Error;
};

/// Generator or slice index out of range.
class BadIndex : public Error {
public:
    using Error::Error;
};

class Singular : public Error {
public:
    using Error::Error;
};

/// The triangular structure of a restricted generator does not hold. This is
/// always an implementation bug.
class StructureViolation : public Error {
public:
    using Error::Error;
};

/// The triangular solve broke down: a phi vanished or an anti-diagonal
/// coordinate came out 0. Happens for values not coming from Omega, and also
/// for matrices of Omega off the generic part.
class DegenerateInput : public Error {
public:
    using Error::Error;
};

class NotInOmega : public Error {
public:
    NotInOmega(int order)
        : Error("J_" + std::to_string(order) + " = 0"), order_(order) {}

    /// Order of the first vanishing lower-left corner minor.
    int order() const { return order_; }

private:
    int order_;
};

}  // namespace uinv
