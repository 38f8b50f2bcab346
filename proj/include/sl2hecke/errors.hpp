#pragma once

#include <stdexcept>
#include <string>

namespace sl2hecke {

struct NotPrimeError : std::invalid_argument {
    explicit NotPrimeError(long p)
        : std::invalid_argument("not a prime: " + std::to_string(p)) {}
};

struct PTooSmallError : std::invalid_argument {
    explicit PTooSmallError(long p)
        : std::invalid_argument("p must be >= 5, got " + std::to_string(p)) {}
};

struct UnsupportedDegreeError : std::invalid_argument {
    explicit UnsupportedDegreeError(long e)
        : std::invalid_argument("extension degree must be in [1,3], got " + std::to_string(e)) {}
};

struct DivisionByZeroError : std::domain_error {
    DivisionByZeroError() : std::domain_error("division by zero") {}
};

struct ZeroHasNoLogError : std::domain_error {
    ZeroHasNoLogError() : std::domain_error("discrete log of zero") {}
};

struct SpecMismatchError : std::invalid_argument {
    SpecMismatchError() : std::invalid_argument("operands belong to different field specs") {}
};

struct VariableMismatchError : std::invalid_argument {
    VariableMismatchError() : std::invalid_argument("polynomials over different variable lists") {}
};

struct InternalCheckFailed : std::logic_error {
    explicit InternalCheckFailed(const std::string& what) : std::logic_error(what) {}
};

// Parse failures carry the byte offset of the offending token.
struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

}  // namespace sl2hecke
