#pragma once

#include <stdexcept>
#include <string>

namespace ratcat {

// Cell out of bounds, wrong grid shape for an operation, malformed argument.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Above-count vector that does not describe a Dyck path on its grid.
class InvalidPathError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised by div_q_exact / div_t_exact when a monomial is not divisible.
class ExactDivisionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A property that the mathematics guarantees was observed to fail.
// Always indicates a bug, never bad input.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Well-formed request outside the supported range (e.g. Schur form for n >= 4).
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ratcat
