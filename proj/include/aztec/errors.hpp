#pragma once

#include <stdexcept>
#include <string>

namespace aztec {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EncodingError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// input violates an operation's precondition (invalid sequence, tableau, family, ...)
struct ContractViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// an exact identity that must hold evaluated to something else
struct IdentityViolation : std::logic_error {
    using std::logic_error::logic_error;
};

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace aztec
