#include "wfinite/error.hpp"

namespace wfinite {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kInvalidMeasure: return "InvalidMeasure";
    case ErrorKind::kInvalidSample: return "InvalidSample";
    case ErrorKind::kDomain: return "DomainError";
    case ErrorKind::kSizeMismatch: return "SizeMismatch";
    case ErrorKind::kIntensityExhausted: return "IntensityExhausted";
    case ErrorKind::kEmptyTrain: return "EmptyTrain";
    case ErrorKind::kNumerical: return "NumericalError";
    case ErrorKind::kChannelMismatch: return "ChannelMismatch";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kDegenerateLimit: return "DegenerateLimit";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what),
      kind_(kind) {}

void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace wfinite
