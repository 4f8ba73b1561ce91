#pragma once

#include <stdexcept>
#include <string>

namespace uhw {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (coordinates, algebra spec, JSON payloads).
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Parameter outside the integral classes the classifiers handle.
struct NotIntegralError : Error {
    explicit NotIntegralError(const std::string& what) : Error(what) {}
};

// Operation called on the wrong kind of parameter (regular vs singular,
// integer vs half-odd, su vs so*).
struct WrongCaseError : Error {
    explicit WrongCaseError(const std::string& what) : Error(what) {}
};

// Enumeration or diagram size beyond the configured cap.
struct LimitError : Error {
    explicit LimitError(const std::string& what) : Error(what) {}
};

// Structural misuse: length mismatch, cross-algebra operation, multiset
// mismatch, p > q.
struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& what) : Error(what) {}
};

}  // namespace uhw
