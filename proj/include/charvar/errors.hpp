#ifndef CHARVAR_ERRORS_HPP
#define CHARVAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace charvar {

/// Malformed or inconsistent input (bad lattice, duplicate hyperplanes, ...).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured size cap (enumeration support size, minor size) was exceeded.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace charvar

#endif  // CHARVAR_ERRORS_HPP
