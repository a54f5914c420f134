#pragma once

// Concrete re-evaluation of solver models, and the sat/unsat/unknown to
// Verdict step.

#include <string>
#include <string_view>

#include "parachk/model.hpp"
#include "parachk/propagation.hpp"
#include "parachk/solver.hpp"
#include "parachk/verdict.hpp"

namespace parachk {

/// True iff `w` satisfies every constraint of `cs` by direct enumeration
/// of output positions. On failure, `why` (if given) names the first
/// violated constraint.
bool check_witness(const WitnessSummary& w, const ConstraintSet& cs, std::string* why = nullptr);

/// Reads u, pos and the intermediates off `model` at the points queried by
/// `cs`. Throws TypeError if an intermediate's shape slots violate their
/// refinement, ParseError on terms the evaluator cannot handle.
WitnessSummary witness_from_model(const Model& model, const ConstraintSet& cs);

/// Parses `model_text`, extracts the witness and checks it. Any parse or
/// extraction error yields false.
bool validate_witness(std::string_view model_text, const ConstraintSet& cs, std::string* why = nullptr);

Verdict interpret(const RawResult& r, const ConstraintSet& cs);

/// Human-readable table of a witness; atoms rendered through cs.atoms.
std::string format_witness(const WitnessSummary& w, const ConstraintSet& cs);

}  // namespace parachk
