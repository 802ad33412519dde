#include "negacap/errors.hpp"

namespace negacap {

const char* error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::InvalidP: return "InvalidP";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::NotHP: return "NotHP";
    case ErrorKind::NotCPTP: return "NotCPTP";
    case ErrorKind::BadWeights: return "BadWeights";
    case ErrorKind::NotTPSum: return "NotTPSum";
    case ErrorKind::NotDensityOperator: return "NotDensityOperator";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::NotTwoMode: return "NotTwoMode";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::InvalidBlocks: return "InvalidBlocks";
    case ErrorKind::InvalidWavefunction: return "InvalidWavefunction";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace negacap
