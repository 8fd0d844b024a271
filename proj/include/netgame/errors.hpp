#pragma once

#include <stdexcept>
#include <string>

namespace netgame {

// Bad input: malformed profile, out-of-range parameter, unparseable file.
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Request exceeds a configured enumeration cap.
struct cap_exceeded : std::runtime_error {
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace netgame
