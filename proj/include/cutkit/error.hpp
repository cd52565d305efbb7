#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cutkit {

enum class ErrorKind {
    OrderLimitExceeded,
    NotCoprime,
    ElementNotInGroup,
    PrimeDoesNotDivideOrder,
    NotNormal,
    InvalidPermutation,
    InconsistentPresentation,
    UnknownName,
    InvalidAction,
    InvalidParameters,
    NoActionFound,
    NotAHomomorphism,
    NotBijective,
    NoneFound,
    AutomorphismOrderMismatch,
    NotCoprimeInput,
    EvenPrime,
    NoSuitablePrime,
    DiagonalizationFailure,
    PrimeDividesComplementOrder,
    KDoesNotDivide,
    WrongPrime,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Base exception for every failure reported by the library. The kind is
/// machine-readable; what() carries the human context.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace cutkit
