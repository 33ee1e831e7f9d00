#pragma once

#include <stdexcept>
#include <string>

namespace dyckwalk {

/// Argument outside the mathematical domain of an operation (p = 1/2, m < 2, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Request refused because the work grows exponentially past a fixed guard.
class SizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// An identity the theory guarantees did not hold. Always an implementation bug.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace dyckwalk
