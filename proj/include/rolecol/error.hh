#pragma once

#include <stdexcept>
#include <string>

namespace rolecol {

/// Bad input: out-of-range ids, malformed files, violated preconditions.
class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An enumeration or materialisation would exceed a size guard.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A certificate or structural invariant that must hold did not. Always a bug
/// or a counterexample worth reporting, never a user error.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace rolecol
