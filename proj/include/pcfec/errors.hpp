// Error types thrown on contract violations across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace pcfec {

struct NonPrimitivePolynomial : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

struct LengthMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct UnsupportedParameters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NoErasures : std::logic_error {
    using std::logic_error::logic_error;
};

struct ConfigMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BracketError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace pcfec
