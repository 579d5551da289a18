#ifndef SAL_ERROR_HPP
#define SAL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sal {

enum class ErrorCode {
  InvalidArgument,
  NonSquare,
  NonSymmetric,
  DimMismatch,
  MalformedBlock,
  DuplicatePairInTwoBlocks,
  UncoveredPair,
  NotAPermutation,
  InvalidDimension,
  InvalidOrder,
  AllParamsZero,
  ExcludedBeta,
  PointNotInBlock,
  ClosureCapExceeded,
  ParseError,
  IoError,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NonSymmetric: return "NonSymmetric";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::MalformedBlock: return "MalformedBlock";
    case ErrorCode::DuplicatePairInTwoBlocks: return "DuplicatePairInTwoBlocks";
    case ErrorCode::UncoveredPair: return "UncoveredPair";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::InvalidDimension: return "InvalidDimension";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::AllParamsZero: return "AllParamsZero";
    case ErrorCode::ExcludedBeta: return "ExcludedBeta";
    case ErrorCode::PointNotInBlock: return "PointNotInBlock";
    case ErrorCode::ClosureCapExceeded: return "ClosureCapExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Error";
}

}  // namespace sal

#endif
