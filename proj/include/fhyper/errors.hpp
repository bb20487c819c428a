#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fhyper {

enum class ErrorKind {
  NotPrimePower,
  FieldTooLarge,
  ZeroHasNoLog,
  OrderMismatch,
  NotRational,
  BadDivisor,
  UnbalancedDegrees,
  NotCoprime,
  DegenerateCancellation,
  NotDefinedOverQ,
  BadFieldForParams,
  ZeroArgument,
  CharacteristicClash,
  IndexOutOfRange,
  MaximalCellHasNoComponent,
  SingularFiber,
  BadPartition,
  BadParameter,
  CacheFormat,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so
// callers (CLI, bindings) can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fhyper
