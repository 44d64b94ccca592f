#pragma once

#include <stdexcept>
#include <string>

namespace amalgam {

enum class ErrorKind {
  InvalidArgument,
  UnsupportedPair,
  MalformedQuery,
  OutOfDualityRange,
  SpecTooSmall,
  CoverageGap,
  IndexOutOfRange,
  NotBandLimited,
  UnsupportedSpace,
  GridTooSmall,
  SweepDegenerate,
  DegenerateFit,
  DataFormat,
  Overflow,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a machine-readable kind so the
// CLI can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace amalgam
