#pragma once

#include <stdexcept>

namespace dsrg {

// Inadmissible construction parameters (divisibility, ranges, non-prime order).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Inputs that are well-formed but violate a hypothesis of a construction.
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A graph that does not have the shape an operation requires (loops, asymmetry).
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text or JSON input.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dsrg
