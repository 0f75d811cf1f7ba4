#pragma once

#include <stdexcept>
#include <string>

namespace qorbit {

// Caller violated a documented precondition (mismatched variable sets,
// wrong algebra, zero-dimensional orbit, unknown scope, ...).
struct usage_error : std::invalid_argument {
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

// Input text does not match the expression grammar.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// The operand is outside the class an exact algorithm supports
// (non-affine momentum dependence, e^p coefficients under Fourier,
// a shift that cannot be folded exactly).
struct unsupported_class_error : std::domain_error {
    explicit unsupported_class_error(const std::string& what) : std::domain_error(what) {}
};

// A numerical routine detected an inconsistent or unstable state.
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qorbit
