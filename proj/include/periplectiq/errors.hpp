#pragma once

#include <stdexcept>
#include <string>

namespace periplectiq {

struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

// Signals an element outside the A_1 localization (denominator vanishes at q = 1).
struct PoleAtOne : std::domain_error {
    explicit PoleAtOne(const std::string& what) : std::domain_error(what) {}
};

struct ShapeError : std::invalid_argument {
    explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

struct SymmetrizerDegenerate : std::runtime_error {
    explicit SymmetrizerDegenerate(const std::string& what) : std::runtime_error(what) {}
};

struct PatternError : std::invalid_argument {
    explicit PatternError(const std::string& what) : std::invalid_argument(what) {}
};

struct CertificateFailure : std::runtime_error {
    explicit CertificateFailure(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace periplectiq
