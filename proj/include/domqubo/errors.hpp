#pragma once

#include <stdexcept>
#include <string>

namespace domqubo {

// Malformed input text (edge list, DIMACS, model JSON).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// The requested model cannot be satisfied by construction
// (e.g. an isolated vertex under an open-neighborhood constraint).
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

// Instance too large for an enumeration-based routine.
class SizeError : public std::runtime_error {
public:
    explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace domqubo
