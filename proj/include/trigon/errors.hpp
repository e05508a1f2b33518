#pragma once

#include <stdexcept>
#include <string>

namespace trigon {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// ---- field ----
struct NotPrimePower : Error {
    explicit NotPrimePower(int q)
        : Error("NotPrimePower: q = " + std::to_string(q) + " is not a prime power") {}
};
struct UnsupportedOrder : Error {
    explicit UnsupportedOrder(int q)
        : Error("UnsupportedOrder: q = " + std::to_string(q) +
                " is outside the built-in table (supported prime powers up to 27)") {}
};
struct DivisionByZero : Error {
    DivisionByZero() : Error("DivisionByZero: inv(0) is undefined") {}
};

// ---- geometry ----
struct AxiomViolation : Error {
    explicit AxiomViolation(const std::string& witness)
        : Error("AxiomViolation: " + witness) {}
};
struct MalformedInput : Error {
    explicit MalformedInput(const std::string& what)
        : Error("MalformedInput: " + what) {}
};
struct SamePoint : Error {
    SamePoint() : Error("SamePoint: line_through requires two distinct points") {}
};
struct SameLine : Error {
    SameLine() : Error("SameLine: meet requires two distinct lines") {}
};
struct TooLarge : Error {
    explicit TooLarge(const std::string& what) : Error("TooLarge: " + what) {}
};

// ---- bijection ----
struct SearchTimeout : Error {
    explicit SearchTimeout(long long ms)
        : Error("SearchTimeout: budget of " + std::to_string(ms) + " ms exhausted") {}
};
struct UnverifiedBijection : Error {
    explicit UnverifiedBijection(const std::string& what)
        : Error("UnverifiedBijection: " + what) {}
};

// ---- presentation / complex ----
struct InvalidK : Error {
    explicit InvalidK(const std::string& what) : Error("InvalidK: " + what) {}
};
struct InvalidPresentation : Error {
    explicit InvalidPresentation(const std::string& what)
        : Error("InvalidPresentation: " + what) {}
};

// ---- shift ----
struct WindowTooSmall : Error {
    explicit WindowTooSmall(const std::string& what)
        : Error("WindowTooSmall: " + what) {}
};
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what)
        : Error("BudgetExceeded: " + what) {}
};

// ---- serialization ----
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("ParseError: " + what) {}
};

} // namespace trigon
