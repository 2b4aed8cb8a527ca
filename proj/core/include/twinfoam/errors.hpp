#pragma once

#include <stdexcept>
#include <string>

namespace twinfoam {

// Malformed or inconsistent user input (PD text, parameter strings, bad face ids).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A structural invariant that the theory guarantees has been violated.
// Any occurrence on a valid diagram is either an implementation bug or a
// genuine counterexample; it is never handled silently.
class InvariantViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A web component still has more than two vertices and no removable
// same-type adjacent pair.
class IrreducibleWebError : public InvariantViolation {
public:
    using InvariantViolation::InvariantViolation;
};

// Component partitions of a cube edge differ by something other than a
// single merge or a single split.
class MalformedEdgeError : public InvariantViolation {
public:
    using InvariantViolation::InvariantViolation;
};

// An edge signature outside the fourteen supported local cases.
class UnsupportedEdgeSignatureError : public InvariantViolation {
public:
    using InvariantViolation::InvariantViolation;
};

// The total differential fails to square to zero (or a face of the signed
// cube fails to anti-commute).
class D2ViolationError : public InvariantViolation {
public:
    using InvariantViolation::InvariantViolation;
};

// Division by zero in exact arithmetic.
class DivisionByZeroError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace twinfoam
