#pragma once
#include <stdexcept>
#include <string>

namespace loopfield {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidProfileError : Error { using Error::Error; };
struct ConventionError : Error { using Error::Error; };
struct NotDifferentiableError : Error { using Error::Error; };
struct GeometryError : Error { using Error::Error; };
struct AmbiguousTypeError : Error { using Error::Error; };
struct PositivityViolationError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

}  // namespace loopfield
