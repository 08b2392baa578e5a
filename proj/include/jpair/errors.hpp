#pragma once

#include <stdexcept>
#include <string>

namespace jpair {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A precondition of an operation was violated by the caller.
class ContractViolation : public Error {
public:
    explicit ContractViolation(const std::string& msg) : Error(msg) {}
};

/// An iterative kernel failed to converge within its iteration cap.
class NumericalFailure : public Error {
public:
    explicit NumericalFailure(const std::string& msg) : Error(msg) {}
};

/// A linear system was singular to working tolerance. Carries the offending
/// pivot magnitude so callers can report how close to singular the matrix was.
class QuasiSingular : public Error {
public:
    QuasiSingular(const std::string& msg, double pivot)
        : Error(msg), pivot_(pivot) {}
    double pivot() const noexcept { return pivot_; }

private:
    double pivot_ = 0.0;
};

/// The Bergman operator of a pair (x, y) is singular to tolerance, so the
/// quasi-inverse x^y does not exist numerically.
class NotQuasiInvertible : public Error {
public:
    explicit NotQuasiInvertible(const std::string& msg) : Error(msg) {}
    NotQuasiInvertible(const std::string& msg, double pivot)
        : Error(msg), pivot_(pivot) {}
    double pivot() const noexcept { return pivot_; }

private:
    double pivot_ = 0.0;
};

/// A pair claimed to be idempotent fails the defining identities, or the
/// spectrum of its Peirce operator deviates from {0, 1, 2}.
class InvalidIdempotent : public Error {
public:
    explicit InvalidIdempotent(const std::string& msg) : Error(msg) {}
};

}  // namespace jpair
