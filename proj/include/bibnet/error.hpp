#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bibnet {

/// Malformed or unreadable input data. Maps to CLI exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural problem at a specific line of an export file.
class FormatError : public InputError {
 public:
  FormatError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Bad configuration or command-line values. Exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The data does not support the requested statistic (too few rows, no
/// authored papers, edgeless graph, ...). Exit code 3.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bibnet
