#pragma once

// Runs a witness morphism on the original examples, without going through
// the constraint set the solver saw.

#include <string>

#include "parachk/problem.hpp"
#include "parachk/verdict.hpp"

namespace parachk::testing {

/// True iff running the witness (u, g) on every example reproduces its
/// output; foldr examples are folded from the base.
bool replay_witness(const Problem& p, const WitnessSummary& w, std::string* why = nullptr);

}  // namespace parachk::testing
