#pragma once

#include <stdexcept>
#include <string>

namespace zeno {

// Bad arguments to a library call: non-finite entries, wrong dimensions,
// parameters outside their domain.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

// The physics cannot continue: certain leakage at a projective measurement,
// divergent entangling time, a generator with gain.
class PhysicsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegenerateProjection : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

class DivergentTime : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace zeno
