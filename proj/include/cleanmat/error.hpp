#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cleanmat {

enum class ErrorKind {
    InvalidSpec,
    OwnerMismatch,
    NotLocal,
    NotAUnit,
    InfiniteRing,
    NotInvertible,
    NotApplicable,
    InternalContractViolation,
    NoSolution,
    BaseRootMissing,
    Undecidable,
    TrivialCertificate,
    NoFactorization,
    NotPiRegular,
    TooLarge,
    ParseError,
};

inline const char *to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::OwnerMismatch: return "OwnerMismatch";
    case ErrorKind::NotLocal: return "NotLocal";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::InfiniteRing: return "InfiniteRing";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::InternalContractViolation: return "InternalContractViolation";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::BaseRootMissing: return "BaseRootMissing";
    case ErrorKind::Undecidable: return "Undecidable";
    case ErrorKind::TrivialCertificate: return "TrivialCertificate";
    case ErrorKind::NoFactorization: return "NoFactorization";
    case ErrorKind::NotPiRegular: return "NotPiRegular";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Base of every exception thrown by the library. The kind is the
/// machine-readable part; the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Literal parse failure; `position` is a 0-based offset into the input.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string &what)
        : Error(ErrorKind::ParseError, what + " at position " + std::to_string(position)),
          position_(position)
    {
    }

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

namespace detail {

[[noreturn]] inline void contract_violation(const std::string &what)
{
    throw Error(ErrorKind::InternalContractViolation, what);
}

} // namespace detail

} // namespace cleanmat
