#pragma once

#include <stdexcept>
#include <string>

namespace oplin {

/// Malformed or inconsistent arguments (bad text, mismatched path/paving sizes,
/// zero divisors, mixed scalar domains).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// The requested operation is not available in the chosen scalar domain,
/// e.g. a sign test on a symbolic value or a division by a non-unit polynomial.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A coefficient index outside the working range of a system or sequence.
class RangeError : public std::out_of_range {
public:
    explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

}  // namespace oplin
