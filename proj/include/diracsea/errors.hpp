#pragma once

#include <stdexcept>
#include <string>

namespace diracsea {

// Bad inputs: violated preconditions or parameter invariants.
class InvalidParams : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DomainError : public InvalidParams {
public:
    using InvalidParams::InvalidParams;
};

class SeedRegimeViolation : public InvalidParams {
public:
    using InvalidParams::InvalidParams;
};

// A computation ran but failed to meet its accuracy contract.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonConvergence : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class StepLimitExceeded : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class IdentityMismatch : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class CutoffTooSmall : public NumericalError {
public:
    using NumericalError::NumericalError;
};

} // namespace diracsea
