#pragma once

#include <stdexcept>
#include <string>

namespace shapgap {

inline constexpr const char* kVersion = "0.1.0";

// Bad input data or contract violation; maps to CLI exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// I/O and other runtime failures; maps to CLI exit code 3.
class RuntimeError : public std::runtime_error {
 public:
  explicit RuntimeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace shapgap
