#pragma once

#include <stdexcept>
#include <string>

namespace fundcoef {

// Argument outside an operation's domain (bad residue, non-positive-definite
// form, even modulus, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A coefficient was requested beyond the guaranteed-valid prefix of a
// truncated object, or a numerical tail estimate exceeded its tolerance.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A constructed object violated one of its structural invariants
// (fractional residue, D-dependence, malformed table, ...).
class InvariantError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed serialized input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fundcoef
