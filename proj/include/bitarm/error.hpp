#pragma once

#include <stdexcept>
#include <string>

namespace bitarm {

// Coarse classification used by the CLI to pick an exit code.
enum class ErrorCategory { io, validation, config, internal };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, std::string code, const std::string& message)
      : std::runtime_error(message), category_(category), code_(std::move(code)) {}

  ErrorCategory category() const noexcept { return category_; }
  // Stable identifier such as "RaggedRow"; emitted in machine-readable errors.
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorCategory category_;
  std::string code_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error(ErrorCategory::io, "IoError", message) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& message)
      : Error(ErrorCategory::config, "ConfigError", message) {}
};

}  // namespace bitarm
