#pragma once

#include <stdexcept>
#include <string>

namespace hodgecalc {

/// Operands with incompatible shapes (matrix sizes, ambient dimensions).
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input that is not the kind of object an operation is defined on:
/// a non-nilpotent operator, a grading that does not decompose the space,
/// a subspace that is not contained where it must be.
class InvalidStructure : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A sign or twist convention was violated upstream, e.g. a non-hermitian
/// Gram matrix handed to a positivity test, or a pairing whose target twist
/// does not match the weight it is supposed to polarize.
class ConventionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Raised when a postcondition that a theorem guarantees for valid input
/// fails. Such a failure is either a bug or a counterexample.
class CounterexampleAlarm : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hodgecalc
