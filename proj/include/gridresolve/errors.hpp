#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gridresolve {

/// Malformed or out-of-range arguments (bad vertex, duplicate, violated precondition).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A search or enumeration would exceed its configured budget.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, std::uint64_t required, std::uint64_t budget)
        : std::runtime_error(what), required_(required), budget_(budget) {}

    /// Work units the request needs (saturated at UINT64_MAX), or the count reached when aborted.
    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

/// A constructed set failed its own minimality verification.
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace gridresolve
