#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sandlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument is outside the documented domain (n too small, bad vertex, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An exhaustive search would exceed the configured brute-force cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// A configuration that must be stable is not.
class UnstableInput : public Error {
public:
    using Error::Error;
};

/// A configuration that must be recurrent is not.
class NonRecurrentInput : public Error {
public:
    using Error::Error;
};

/// A word, orientation or payload violates its structural invariants.
class MalformedInput : public Error {
public:
    using Error::Error;
};

/// Raised when the SSM iteration guard trips; indicates a bug, not model failure.
class IterationGuardExceeded : public Error {
public:
    using Error::Error;
};

/// Explicit limits for exhaustive enumeration.
struct BruteForceCaps {
    int max_edges = 24;
    std::uint64_t max_states = 50'000'000;
};

}  // namespace sandlab
