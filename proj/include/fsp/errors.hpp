#pragma once
#include <stdexcept>
#include <string>

namespace fsp {

struct ring_mismatch_error : std::runtime_error {
    explicit ring_mismatch_error(const std::string& m) : std::runtime_error(m) {}
};

struct not_invertible_error : std::runtime_error {
    explicit not_invertible_error(const std::string& m) : std::runtime_error(m) {}
};

struct not_divisible_error : std::runtime_error {
    explicit not_divisible_error(const std::string& m) : std::runtime_error(m) {}
};

struct precision_error : std::runtime_error {
    explicit precision_error(const std::string& m) : std::runtime_error(m) {}
};

struct unsupported_involution_error : std::runtime_error {
    explicit unsupported_involution_error(const std::string& m) : std::runtime_error(m) {}
};

// A singular triangular system while expanding in fixed-word classes;
// would falsify the basis theorem for the given formal group law.
struct basis_failure_error : std::runtime_error {
    explicit basis_failure_error(const std::string& m) : std::runtime_error(m) {}
};

// Internal identity failures (would falsify a verified algebraic fact).
struct invariant_violation : std::logic_error {
    explicit invariant_violation(const std::string& m) : std::logic_error(m) {}
};

} // namespace fsp
