#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace upho {

enum class ErrorCode {
  RankMismatch,
  CycleDetected,
  NotReduced,
  NotComparable,
  NoMinimum,
  NoJoin,
  NoMeet,
  JoinOfAtomsMissing,
  ChainNotModular,
  ChainNotMaximal,
  DualNotGraded,
  NonUnitConstantTerm,
  UnsupportedFieldOrder,
  SizeGuard,
  BudgetExceeded,
  InhomogeneousRelation,
  DepthExceedsTruncation,
  SearchBudgetExceeded,
  BadInput,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// NoJoin / NoMeet: the antichain of minimal upper (maximal lower) bounds
class NoBoundError : public Error {
 public:
  NoBoundError(ErrorCode code, const std::string& what, std::vector<std::uint32_t> cert)
      : Error(code, what), certificate(std::move(cert)) {}
  std::vector<std::uint32_t> certificate;
};

// guard limits shared by the generators
inline constexpr std::size_t kMaxElements = 50000;

}  // namespace upho
