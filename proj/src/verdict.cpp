#include "parachk/verdict.hpp"

namespace parachk {

VerdictKind kind_of(const Verdict& v) {
  switch (v.index()) {
    case 0: return VerdictKind::Realizable;
    case 1: return VerdictKind::Unrealizable;
    default: return VerdictKind::Unknown;
  }
}

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Realizable: return "Realizable";
    case VerdictKind::Unrealizable: return "Unrealizable";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(UnknownReason reason) {
  switch (reason) {
    case UnknownReason::Timeout: return "timeout";
    case UnknownReason::SolverUnknown: return "solver-unknown";
    case UnknownReason::WitnessValidationFailed: return "witness-validation-failed";
  }
  return "?";
}

std::string describe(const Verdict& v) {
  if (const auto* u = std::get_if<Unknown>(&v)) return "Unknown(" + to_string(u->reason) + ")";
  return to_string(kind_of(v));
}

}  // namespace parachk
