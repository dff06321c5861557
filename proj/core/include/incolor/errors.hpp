#pragma once

#include <stdexcept>
#include <string>

namespace incolor {

/// Malformed or out-of-contract input (bad file, bad argument, violated precondition).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The graph does not belong to any class with a known optimal construction.
class UnsupportedGraph : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A search ran out of its node budget before reaching a conclusion.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A construction produced something the verifier rejected. Always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace incolor
