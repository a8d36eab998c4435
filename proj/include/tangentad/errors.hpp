#pragma once

#include <stdexcept>
#include <string>

namespace tangentad {

// A family of maps fed to a pullback tupling does not share its base. Axiom
// checkers treat this as a failing diagram, not a hard error.
struct ConeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A requested enumeration or construction exceeds the configured size bounds.
struct BoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed external input (files, tables, serialized payloads).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace tangentad
