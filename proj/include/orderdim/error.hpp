#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orderdim {

enum class ErrorCode {
  DuplicateLabel,
  UnknownLabel,
  CycleDetected,
  IndexOutOfRange,
  NotAChain,
  InconsistentStream,
  SizeMismatch,
  NotAnExtension,
  BudgetExceeded,
  TooLarge,
  NotIncomparableChains,
  ChainsNotPairwiseIncomparable,
  InvalidRealizer,
  ElementNotRemoved,
  NotSeparated,
  PointOutsideInterval,
  InvalidInterval,
  InvalidInjection,
  BadArity,
  VariantArityMismatch,
  MismatchedInputs,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Base of every exception thrown by the library. The code identifies the
/// contract that was violated; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Thrown when a relation closes into a cycle. `cycle` lists element labels
/// x0, x1, ..., x(m-1) with x(i) R x(i+1) and x(m-1) R x0.
class CycleError : public Error {
 public:
  CycleError(std::vector<std::string> cycle, const std::string& message)
      : Error(ErrorCode::CycleDetected, message), cycle_(std::move(cycle)) {}

  const std::vector<std::string>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

/// A supplied total order breaks the poset's order on (lower, upper):
/// lower is strictly below upper in the poset but not in the extension.
class NotAnExtensionError : public Error {
 public:
  NotAnExtensionError(std::size_t ext_index, std::size_t lower, std::size_t upper,
                      const std::string& message)
      : Error(ErrorCode::NotAnExtension, message),
        ext_index_(ext_index),
        lower_(lower),
        upper_(upper) {}

  std::size_t ext_index() const noexcept { return ext_index_; }
  std::size_t lower() const noexcept { return lower_; }
  std::size_t upper() const noexcept { return upper_; }

 private:
  std::size_t ext_index_;
  std::size_t lower_;
  std::size_t upper_;
};

/// Exact dimension search ran out of nodes. The true dimension lies in
/// [lower, upper].
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(std::size_t lower, std::size_t upper, std::uint64_t nodes,
                      const std::string& message)
      : Error(ErrorCode::BudgetExceeded, message), lower_(lower), upper_(upper), nodes_(nodes) {}

  std::size_t lower() const noexcept { return lower_; }
  std::size_t upper() const noexcept { return upper_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::size_t lower_;
  std::size_t upper_;
  std::uint64_t nodes_;
};

}  // namespace orderdim
