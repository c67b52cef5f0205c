#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace quatla {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

/// A complex matrix is not in the range of the tau embedding.
class StructureError : public Error {
public:
    using Error::Error;
};

class NotHyperhermitian : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Eigenvalues of a j-compatible Hermitian matrix did not pair up.
class PairingError : public Error {
public:
    using Error::Error;
};

class GradeError : public Error {
public:
    using Error::Error;
};

class NotSkew : public Error {
public:
    using Error::Error;
};

/// A form is not fixed by rho(j).
class NotReal : public Error {
public:
    using Error::Error;
};

class SingularError : public Error {
public:
    using Error::Error;
};

/// Malformed input document.
class ParseError : public Error {
public:
    using Error::Error;
};

class DivisionByZeroAt : public Error {
public:
    explicit DivisionByZeroAt(std::vector<double> point)
        : Error("division by zero while evaluating field"), point_(std::move(point)) {}

    const std::vector<double>& point() const noexcept { return point_; }

private:
    std::vector<double> point_;
};

} // namespace quatla
