#pragma once

#include <stdexcept>
#include <string>

namespace rado {

/// Bad input: malformed values, violated preconditions, unsatisfiable requests.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Request exceeds a configured search/enumeration bound.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rado
