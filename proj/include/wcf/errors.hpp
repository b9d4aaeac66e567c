#pragma once

#include <stdexcept>
#include <string>

namespace wcf {

// Caller misuse: bad indices, mismatched spaces, violated preconditions.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A configured cap was exceeded (enumeration cap, vertex cap, exponent guard).
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wcf
