#ifndef KCANON_ERRORS_HPP
#define KCANON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kcanon {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnsupportedTypeError : Error {
    explicit UnsupportedTypeError(const std::string& msg) : Error(msg) {}
};

struct DominanceViolation : Error {
    explicit DominanceViolation(const std::string& msg) : Error(msg) {}
};

struct NotAntiInvariant : Error {
    explicit NotAntiInvariant(const std::string& msg) : Error(msg) {}
};

struct TriangularityViolation : Error {
    explicit TriangularityViolation(const std::string& msg) : Error(msg) {}
};

struct NonTermination : Error {
    explicit NonTermination(const std::string& msg) : Error(msg) {}
};

struct MixedRootSystems : Error {
    explicit MixedRootSystems(const std::string& msg) : Error(msg) {}
};

struct NotAPartitionOfN : Error {
    explicit NotAPartitionOfN(const std::string& msg) : Error(msg) {}
};

struct NonIntegralExponent : Error {
    explicit NonIntegralExponent(const std::string& msg) : Error(msg) {}
};

struct ExponentOverflow : Error {
    explicit ExponentOverflow(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace kcanon

#endif
