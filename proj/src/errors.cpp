#include "fhyper/errors.hpp"

namespace fhyper {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::ZeroHasNoLog: return "ZeroHasNoLog";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::NotRational: return "NotRational";
    case ErrorKind::BadDivisor: return "BadDivisor";
    case ErrorKind::UnbalancedDegrees: return "UnbalancedDegrees";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::DegenerateCancellation: return "DegenerateCancellation";
    case ErrorKind::NotDefinedOverQ: return "NotDefinedOverQ";
    case ErrorKind::BadFieldForParams: return "BadFieldForParams";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::CharacteristicClash: return "CharacteristicClash";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::MaximalCellHasNoComponent: return "MaximalCellHasNoComponent";
    case ErrorKind::SingularFiber: return "SingularFiber";
    case ErrorKind::BadPartition: return "BadPartition";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::CacheFormat: return "CacheFormat";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace fhyper
