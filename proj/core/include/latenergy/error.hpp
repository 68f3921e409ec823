#pragma once

#include <stdexcept>
#include <string>

namespace latenergy {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A LatticeSpec violates its invariants (too-small wrapped dimension, odd
/// column count for the 3^3.4^2 family, zero dimension).
class SpecError : public Error {
public:
    using Error::Error;
};

/// Structural misuse of graphs: mismatched vertex counts, missing edges,
/// a claimed subgraph that is not one.
class GraphError : public Error {
public:
    using Error::Error;
};

/// No closed-form spectrum exists for the requested (family, boundary).
class UnsupportedSpectrumError : public Error {
public:
    using Error::Error;
};

/// Dense work requested beyond the configured size cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// A spectrum does not belong to the graph it was paired with.
class InconsistentInputError : public Error {
public:
    using Error::Error;
};

} // namespace latenergy
