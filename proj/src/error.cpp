#include "sglab/error.hpp"

namespace sglab {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::OrderLimitExceeded: return "OrderLimitExceeded";
    case ErrorKind::NodeCapExceeded: return "NodeCapExceeded";
    case ErrorKind::MalformedSpec: return "MalformedSpec";
    case ErrorKind::DegenerateInterval: return "DegenerateInterval";
    case ErrorKind::NotBoolean: return "NotBoolean";
    case ErrorKind::NotTopBoolean: return "NotTopBoolean";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::HNotContained: return "HNotContained";
    case ErrorKind::LiftOutOfRange: return "LiftOutOfRange";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
  }
  return "Unknown";
}

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::TheoremViolation:
      return 1;
    case ErrorKind::MalformedSpec:
    case ErrorKind::DegenerateInterval:
    case ErrorKind::HNotContained:
    case ErrorKind::NotBoolean:
    case ErrorKind::NotTopBoolean:
      return 2;
    case ErrorKind::OrderLimitExceeded:
    case ErrorKind::NodeCapExceeded:
      return 3;
    default:
      return 4;
  }
}

}  // namespace sglab
