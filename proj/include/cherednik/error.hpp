#pragma once

#include <stdexcept>
#include <string>

namespace cherednik {

// Raised when an operation's precondition on its mathematical input fails
// (size mismatch, invalid box, non-integral charge, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Evaluation hit a vanishing denominator factor.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

// The sample parameter point is not generic enough (two weights coincide).
class CollisionError : public DomainError {
public:
    using DomainError::DomainError;
};

// A representation failed its defining-relation check.
class ValidationError : public DomainError {
public:
    using DomainError::DomainError;
};

inline void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

} // namespace cherednik
