#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ncp {

enum class ErrorKind {
  UnsupportedType,
  InvalidRank,
  InvalidArgument,
  MixedSystems,
  NotBounded,
  NotGraded,
  NotComparable,
  NoMinimum,
  NotUnrefinable,
  NotPartialOrder,
  CapExceeded,
  ScaleExceeded,
  SearchExhausted,
  MalformedCover,
  NonIntegerResult,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (notably the CLI) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::UnsupportedType: return "UnsupportedType";
    case ErrorKind::InvalidRank: return "InvalidRank";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::MixedSystems: return "MixedSystems";
    case ErrorKind::NotBounded: return "NotBounded";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::NoMinimum: return "NoMinimum";
    case ErrorKind::NotUnrefinable: return "NotUnrefinable";
    case ErrorKind::NotPartialOrder: return "NotPartialOrder";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::ScaleExceeded: return "ScaleExceeded";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::MalformedCover: return "MalformedCover";
    case ErrorKind::NonIntegerResult: return "NonIntegerResult";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace ncp
