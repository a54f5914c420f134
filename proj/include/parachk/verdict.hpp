#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "parachk/functor.hpp"

namespace parachk {

/// Concrete shape of every input part of the hole f.
using InputShape = std::vector<Shape>;

/// Concrete container morphism restricted to the queried input shapes,
/// plus the resolved foldr intermediates.
struct WitnessSummary {
  std::map<InputShape, Shape> shape_table;
  /// input shape -> (output position q -> input position)
  std::map<InputShape, std::vector<std::int64_t>> position_table;
  std::map<int, Extension> intermediates;
};

struct Realizable {
  WitnessSummary witness;
};

struct Unrealizable {
  std::string reason;
};

enum class UnknownReason { Timeout, SolverUnknown, WitnessValidationFailed };

struct Unknown {
  UnknownReason reason = UnknownReason::SolverUnknown;
  std::string detail;
};

using Verdict = std::variant<Realizable, Unrealizable, Unknown>;

enum class VerdictKind { Realizable, Unrealizable, Unknown };

VerdictKind kind_of(const Verdict& v);
std::string to_string(VerdictKind kind);
std::string to_string(UnknownReason reason);
/// `Realizable`, `Unrealizable`, or `Unknown(timeout)` etc.
std::string describe(const Verdict& v);

}  // namespace parachk
