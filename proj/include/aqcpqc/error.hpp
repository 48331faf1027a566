#pragma once

#include <stdexcept>
#include <string>

namespace aqcpqc {

// Error categories shared by the C++ core, the C API status codes and the
// CLI's machine-readable error output.
enum class ErrorKind {
  invalid_size,
  invalid_instance,
  invalid_schedule,
  invalid_argument,
  size_limit,
  undefined_metric,
  io,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  const char* kind_name() const {
    switch (kind_) {
      case ErrorKind::invalid_size: return "invalid-size";
      case ErrorKind::invalid_instance: return "invalid-instance";
      case ErrorKind::invalid_schedule: return "invalid-schedule";
      case ErrorKind::invalid_argument: return "invalid-argument";
      case ErrorKind::size_limit: return "size-limit";
      case ErrorKind::undefined_metric: return "undefined-metric";
      case ErrorKind::io: return "io";
      case ErrorKind::internal: return "internal";
    }
    return "internal";
  }

 private:
  ErrorKind kind_;
};

}  // namespace aqcpqc
