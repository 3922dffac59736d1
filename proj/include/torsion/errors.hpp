#pragma once

#include <stdexcept>
#include <string>

namespace torsion {

/// Base of every error the engine raises. Subclasses name the failed
/// precondition; the CLI maps them onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input text that does not parse (rationals, polynomials, curve specs).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Mathematically impossible input or a violated algebraic precondition.
class MathError : public Error {
public:
    using Error::Error;
};

class ZeroDenominator : public MathError {
public:
    ZeroDenominator() : MathError("zero denominator") {}
};

class InexactDivision : public MathError {
public:
    explicit InexactDivision(const std::string& what = "inexact polynomial division")
        : MathError(what) {}
};

class NotInvertible : public MathError {
public:
    explicit NotInvertible(const std::string& what = "element is not invertible")
        : MathError(what) {}
};

class NotSquarefree : public MathError {
public:
    NotSquarefree() : MathError("polynomial is not squarefree") {}
};

class SingularCurve : public MathError {
public:
    SingularCurve() : MathError("singular curve: discriminant is zero") {}
};

class ZeroTwist : public MathError {
public:
    ZeroTwist() : MathError("twist parameter must be nonzero") {}
};

class FieldMismatch : public MathError {
public:
    FieldMismatch() : MathError("coordinates live in different number fields") {}
};

class EvenDegree : public MathError {
public:
    EvenDegree() : MathError("twist square test requires an odd-degree factor") {}
};

class UnsupportedDegree : public MathError {
public:
    explicit UnsupportedDegree(const std::string& what) : MathError(what) {}
};

class OutOfWindow : public MathError {
public:
    explicit OutOfWindow(const std::string& what) : MathError(what) {}
};

class CMInput : public MathError {
public:
    CMInput() : MathError("CM j-invariant: route to the CM classification") {}
};

}  // namespace torsion
