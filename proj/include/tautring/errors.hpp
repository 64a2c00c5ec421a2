#ifndef TAUTRING_ERRORS_HPP
#define TAUTRING_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tautring {

/// Two routes that must agree produced different values.
class InconsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Malformed or incompatible cache file.
class CacheFormatError : public std::runtime_error {
public:
  CacheFormatError(std::size_t line, const std::string &what)
      : std::runtime_error("cache line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace tautring

#endif // TAUTRING_ERRORS_HPP
