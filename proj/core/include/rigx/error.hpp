#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rigx {

enum class ErrorKind {
  InvalidArgument,
  BudgetExceeded,
  PreconditionViolated,
  RankDeficient,
  NotACover,
  NotComputingM,
  DimensionMismatch,
  UnsupportedKind,
  InternalVerificationFailed,
  Format,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Thrown when an exhaustive scan would visit more candidates than allowed.
/// `required` is the predicted candidate count (saturated at UINT64_MAX).
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string stage, std::uint64_t required, std::uint64_t budget)
      : Error(ErrorKind::BudgetExceeded,
              stage + ": " + std::to_string(required) + " candidates exceed budget " +
                  std::to_string(budget)),
        stage_(std::move(stage)),
        required_(required),
        budget_(budget) {}
  const std::string& stage() const noexcept { return stage_; }
  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::string stage_;
  std::uint64_t required_;
  std::uint64_t budget_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace rigx
