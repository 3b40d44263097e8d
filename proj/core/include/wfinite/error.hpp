#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wfinite {

enum class ErrorKind {
  kInvalidMeasure,
  kInvalidSample,
  kDomain,
  kSizeMismatch,
  kIntensityExhausted,
  kEmptyTrain,
  kNumerical,
  kChannelMismatch,
  kDimensionMismatch,
  kDegenerateLimit,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (the CLI,
/// the Monte-Carlo harness) can branch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

inline void require(bool condition, ErrorKind kind, const char* what) {
  if (!condition) raise(kind, what);
}

}  // namespace wfinite
