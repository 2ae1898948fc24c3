#ifndef SGLAB_ERROR_HPP
#define SGLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sglab {

enum class ErrorKind {
  OrderLimitExceeded,
  NodeCapExceeded,
  MalformedSpec,
  DegenerateInterval,
  NotBoolean,
  NotTopBoolean,
  NotASubgroup,
  HNotContained,
  LiftOutOfRange,
  InternalInconsistency,
  TheoremViolation,
};

const char* to_string(ErrorKind kind) noexcept;

// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

// Process exit code for an error kind: 1 theorem violation, 2 input error,
// 3 resource cap, 4 internal failure.
int exit_code_for(ErrorKind kind) noexcept;

}  // namespace sglab

#endif
