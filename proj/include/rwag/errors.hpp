#ifndef RWAG_ERRORS_HPP
#define RWAG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rwag {

// Bad input: malformed config, invalid G0, out-of-range parameter. Exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what)
      : std::runtime_error(what) {}
};

// A structural invariant failed mid-run. Exit code 2.
class InvariantViolation : public std::runtime_error {
 public:
  explicit InvariantViolation(const std::string& what)
      : std::runtime_error(what) {}
};

// Filesystem failure. Exit code 3.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rwag

#endif  // RWAG_ERRORS_HPP
