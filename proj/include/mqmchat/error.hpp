#pragma once

#include <stdexcept>
#include <string>

namespace mqmchat {

// Thrown for invalid inputs, malformed files and contract violations.
// Data-quality findings that are not failures go through Violation instead.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace mqmchat
