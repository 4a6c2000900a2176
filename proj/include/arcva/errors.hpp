#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arcva {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero scalar") {}
};

struct LevelExceeded : Error {
    using Error::Error;
};

struct Inhomogeneous : Error {
    using Error::Error;
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("zero polynomial has no height") {}
};

struct UnknownGenerator : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(unsigned long long budget)
        : Error("work budget of " + std::to_string(budget) + " reduction steps exceeded") {}
};

struct FlavorMismatch : Error {
    using Error::Error;
};

struct UnknownName : Error {
    using Error::Error;
};

struct MissingTableEntry : Error {
    using Error::Error;
};

struct UnknownScenario : Error {
    using Error::Error;
};

// grammar error with byte offset into the input
struct SyntaxError : Error {
    std::size_t offset;
    SyntaxError(const std::string& what, std::size_t off)
        : Error(what + " at offset " + std::to_string(off)), offset(off) {}
};

}  // namespace arcva
