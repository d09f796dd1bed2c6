#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace rbx {

// Error taxonomy used across the library. Callers that violate a documented
// precondition get Precondition; guard limits (size caps, budgets) raise
// Resource or Budget; malformed input files raise Parse; Infeasible marks a
// well-formed request that has no answer (e.g. greedy coloring under a palette
// cap); InvariantViolation marks a "cannot happen" state and carries whatever
// trace the algorithm captured, so harnesses can persist it.
enum class ErrorKind {
  precondition,
  resource,
  parse,
  budget,
  infeasible,
  invariant_violation,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg, std::string trace = {})
      : std::runtime_error(msg), kind_(kind), trace_(std::move(trace)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& trace() const { return trace_; }

 private:
  ErrorKind kind_;
  std::string trace_;
};

[[noreturn]] inline void fail_precondition(const std::string& msg) {
  throw Error(ErrorKind::precondition, msg);
}
[[noreturn]] inline void fail_resource(const std::string& msg) {
  throw Error(ErrorKind::resource, msg);
}
[[noreturn]] inline void fail_parse(const std::string& msg) {
  throw Error(ErrorKind::parse, msg);
}
[[noreturn]] inline void fail_invariant(const std::string& msg, std::string trace = {}) {
  throw Error(ErrorKind::invariant_violation, msg, std::move(trace));
}

}  // namespace rbx
