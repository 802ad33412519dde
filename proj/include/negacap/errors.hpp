#pragma once

#include <stdexcept>
#include <string>

namespace negacap {

enum class ErrorKind {
  NotHermitian,
  NoConvergence,
  InvalidP,
  DimensionMismatch,
  NotPSD,
  NotHP,
  NotCPTP,
  BadWeights,
  NotTPSum,
  NotDensityOperator,
  NotUnitary,
  NotNormalized,
  NotPositiveDefinite,
  BadIndex,
  NotTwoMode,
  InvalidState,
  InvalidParams,
  InvalidBlocks,
  InvalidWavefunction,
  ParseError,
};

const char* error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace negacap
