#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace surfalg {

// Error with a stable machine-readable code ("NotTwoRegular", "EmptyBorder", ...)
// next to the human-readable message.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

// Validation failures carry every violated invariant, not just the first one.
class ValidationError : public Error {
public:
  explicit ValidationError(std::vector<std::string> diagnostics)
      : Error("ValidationError", join(diagnostics)),
        diagnostics_(std::move(diagnostics)) {}

  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

private:
  static std::string join(const std::vector<std::string>& ds) {
    std::string out;
    for (const auto& d : ds) {
      if (!out.empty()) out += "; ";
      out += d;
    }
    return out;
  }

  std::vector<std::string> diagnostics_;
};

}  // namespace surfalg
