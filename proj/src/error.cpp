#include "cmlattice/error.hpp"

namespace cmlattice {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedComplex: return "MalformedComplex";
    case ErrorCode::NotAChainMap: return "NotAChainMap";
    case ErrorCode::MalformedModule: return "MalformedModule";
    case ErrorCode::NotPointed: return "NotPointed";
    case ErrorCode::LatticeNotFull: return "LatticeNotFull";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::OutsideCone: return "OutsideCone";
    case ErrorCode::NotACover: return "NotACover";
    case ErrorCode::NotRadicalDetected: return "NotRadicalDetected";
    case ErrorCode::ExponentOutsideCone: return "ExponentOutsideCone";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ZeroModule: return "ZeroModule";
    case ErrorCode::EmptyDifference: return "EmptyDifference";
    case ErrorCode::EmptyTable: return "EmptyTable";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

}  // namespace cmlattice
