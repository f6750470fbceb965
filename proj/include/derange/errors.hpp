#pragma once

#include <stdexcept>
#include <string>

namespace derange {

// Input that violates a documented precondition or is malformed.
class invalid_input : public std::runtime_error {
public:
  explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// A configurable resource cap (enumeration size, degree, field size) was hit.
class cap_exceeded : public std::runtime_error {
public:
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace derange
