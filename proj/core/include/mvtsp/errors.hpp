#ifndef MVTSP_ERRORS_HPP
#define MVTSP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mvtsp {

// Structured failure codes surfaced to callers (the CLI maps these to exit
// codes and messages).
enum class Errc {
  // instance validation
  EmptyInstance,
  NegativeCost,
  CostTooLarge,
  DemandMismatch,
  ZeroVisit,
  BadFormat,
  // field arithmetic
  UnsupportedDegree,
  DivisionByZero,
  DuplicateAbscissa,
  FieldTooSmall,
  // solvers
  NotEulerian,
  NotReachable,
  PreconditionViolated,
  ExtractionStalled,
  RetriesExhausted,
  BudgetExceeded,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace mvtsp

#endif  // MVTSP_ERRORS_HPP
