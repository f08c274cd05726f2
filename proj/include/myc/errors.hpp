#pragma once

#include <stdexcept>
#include <string>

namespace myc {

/// Input violates an operation's precondition (bad complex, improper colouring, ...).
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A value lies outside the domain an operation accepts (uncoloured vertex, non-unit vector).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Input exceeds a configured order cap.
class SizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Rejection sampling ran out of retries.
class SamplingFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a verified input exhibits something a theorem forbids.
/// Only a bug or a malformed input that slipped past the verifiers can cause it.
class TheoremViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace myc
