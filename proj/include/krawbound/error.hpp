#pragma once

#include <stdexcept>
#include <string>

namespace krawbound {

/// Invalid user-facing input: out-of-range parameters, size caps, malformed data.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Argument outside the region where a special function is defined.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A self-check failed; signals numerical trouble rather than bad input.
class InternalError : public std::runtime_error {
public:
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace krawbound
