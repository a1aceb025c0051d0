#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace seqsub {

// Base for all library errors so callers can catch everything at once.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A sequence operation produced a repeated item in a no-repeat context.
class RepeatViolation : public Error {
 public:
  explicit RepeatViolation(const std::string& what) : Error(what) {}
};

// An exhaustive checker would exceed its evaluation budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t needed, std::uint64_t budget)
      : Error("evaluation budget exceeded: need " + std::to_string(needed) +
              ", budget " + std::to_string(budget)),
        needed(needed),
        budget(budget) {}
  std::uint64_t needed;
  std::uint64_t budget;
};

// Curvature ratio undefined because some probe sequence has f(t) = 0.
class DegenerateInstance : public Error {
 public:
  explicit DegenerateInstance(const std::string& what) : Error(what) {}
};

// Sequence longer than the instance's evaluable stage count.
class StageOutOfRange : public Error {
 public:
  StageOutOfRange(int length, int stages)
      : Error("sequence length " + std::to_string(length) +
              " exceeds stage count " + std::to_string(stages)) {}
};

// Unparseable line in a ratings file; carries the 1-based line number.
class MalformedRecord : public Error {
 public:
  MalformedRecord(std::uint64_t line, const std::string& detail)
      : Error("malformed record at line " + std::to_string(line) + ": " + detail),
        line(line) {}
  std::uint64_t line;
};

// Preprocessing filters eliminated all users or all movies.
class EmptyResult : public Error {
 public:
  explicit EmptyResult(const std::string& what) : Error(what) {}
};

// Exact enumeration would examine more candidates than the guard allows.
class TooLarge : public Error {
 public:
  TooLarge(std::uint64_t candidates, std::uint64_t guard)
      : Error("enumeration needs " + std::to_string(candidates) +
              " candidates, guard is " + std::to_string(guard)),
        candidates(candidates),
        guard(guard) {}
  std::uint64_t candidates;
  std::uint64_t guard;
};

// A structure-exploiting optimum method was used before its cross-check suite ran.
class OracleUnvalidated : public Error {
 public:
  explicit OracleUnvalidated(const std::string& what) : Error(what) {}
};

// Bad arguments to a CLI entry point or public operation.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

}  // namespace seqsub
