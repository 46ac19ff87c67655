#pragma once

#include <stdexcept>
#include <string>

namespace plabic {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Out-of-range sizes, wrong subset cardinalities, unknown labels.
class ParameterError : public Error {
public:
    using Error::Error;
};

// The positions do not describe a valid disk embedding.
class EmbeddingError : public Error {
public:
    using Error::Error;
};

// The graph is embedded but violates a combinatorial expectation
// (non-terminating trip, non-injective labelling, no unique F_empty face ...).
class StructuralError : public Error {
public:
    using Error::Error;
};

// A verification whose outcome is binary failed.
class VerificationError : public Error {
public:
    using Error::Error;
};

class FormatError : public Error {
public:
    using Error::Error;
};

} // namespace plabic
