#pragma once

#include <stdexcept>
#include <string>

namespace mpqp {

/// Broad failure classes; the CLI maps each one to an exit code.
enum class ErrorCategory {
  Validation = 1,
  Numerical = 2,
  Infeasible = 3,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }
  int exit_code() const noexcept { return static_cast<int>(category_); }

 private:
  ErrorCategory category_;
};

#define MPQP_DEFINE_ERROR(Name, Category)                      \
  class Name : public Error {                                  \
   public:                                                     \
    explicit Name(const std::string& what)                     \
        : Error(ErrorCategory::Category, #Name ": " + what) {} \
  };

MPQP_DEFINE_ERROR(DimensionMismatch, Validation)
MPQP_DEFINE_ERROR(ValidationError, Validation)
MPQP_DEFINE_ERROR(ParseError, Validation)
MPQP_DEFINE_ERROR(TooLarge, Validation)
MPQP_DEFINE_ERROR(WrongDimension, Validation)

MPQP_DEFINE_ERROR(CholeskyFailure, Numerical)
MPQP_DEFINE_ERROR(GramSingular, Numerical)
MPQP_DEFINE_ERROR(IterationLimit, Numerical)
MPQP_DEFINE_ERROR(NoStartFound, Numerical)
MPQP_DEFINE_ERROR(BadSeed, Numerical)
MPQP_DEFINE_ERROR(SequenceFailure, Numerical)
MPQP_DEFINE_ERROR(Unbounded, Numerical)

MPQP_DEFINE_ERROR(InfeasibleProblem, Infeasible)
MPQP_DEFINE_ERROR(OutsideSolution, Infeasible)

#undef MPQP_DEFINE_ERROR

}  // namespace mpqp
