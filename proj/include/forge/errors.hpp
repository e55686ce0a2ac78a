#pragma once

#include <stdexcept>
#include <string>

namespace forge {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& what = "division by zero") : Error(what) {}
};

struct NotHomogeneous : Error {
    explicit NotHomogeneous(const std::string& what = "element is not homogeneous") : Error(what) {}
};

struct ZeroInverse : Error {
    explicit ZeroInverse(const std::string& what = "inverse of zero") : Error(what) {}
};

struct SubstitutionPole : Error {
    explicit SubstitutionPole(const std::string& what = "denominator vanishes under substitution") : Error(what) {}
};

struct ArityMismatch : Error {
    explicit ArityMismatch(const std::string& what = "argument count does not match arity") : Error(what) {}
};

struct NotClosed : Error {
    explicit NotClosed(const std::string& what = "cochain is not a cocycle") : Error(what) {}
};

struct SizeLimitExceeded : Error {
    explicit SizeLimitExceeded(const std::string& what = "computation exceeds configured size limit") : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

struct InvalidAlgebra : Error {
    explicit InvalidAlgebra(const std::string& what) : Error("invalid algebra: " + what) {}
};

struct InvalidAutomorphism : Error {
    explicit InvalidAutomorphism(const std::string& what) : Error("invalid automorphism: " + what) {}
};

struct StasheffViolation : Error {
    explicit StasheffViolation(const std::string& what) : Error(what) {}
};

struct MCViolation : Error {
    explicit MCViolation(const std::string& what) : Error(what) {}
};

struct MCPrereqFailed : Error {
    explicit MCPrereqFailed(const std::string& what) : Error(what) {}
};

struct ObstructionNotClosed : Error {
    explicit ObstructionNotClosed(const std::string& what) : Error(what) {}
};

struct ObstructionUnresolved : Error {
    explicit ObstructionUnresolved(const std::string& what) : Error(what) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace forge
