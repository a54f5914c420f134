#pragma once

// End-to-end realizability check: validate, propagate, encode, solve,
// interpret.

#include <optional>

#include "parachk/encode.hpp"
#include "parachk/problem.hpp"
#include "parachk/propagation.hpp"
#include "parachk/solver.hpp"
#include "parachk/verdict.hpp"

namespace parachk {

struct CheckResult {
  Verdict verdict;
  ConstraintSet constraints;
  double elapsed_ms = 0;   // whole pipeline
  double solver_ms = 0;    // 0 on the fast path
  bool fast_path = false;  // decided by propagation alone
  std::optional<RawResult::Status> solver_status;  // of the deciding call
  int solver_calls = 0;
};

/// `base` with the problem's own options (timeout, solver) applied.
SolverConfig resolve_config(const Problem& p, SolverConfig base);

/// Throws the validation/propagation/encoding errors of the stages it
/// runs, and SolverError when the solver fails or cannot be started.
///
/// With intermediates present, the solver is first asked for a small
/// model (see EncodeOptions::intermediate_bound) using at most half the
/// time budget; a validated model settles Realizable. Otherwise the plain
/// script decides, within the remaining budget.
CheckResult check(const Problem& p, const SolverConfig& cfg = default_solver_config(),
                  const EncodeOptions& options = {});

/// The script check() would send for `p`.
SmtScript emit_smt(const Problem& p, const EncodeOptions& options = {});

}  // namespace parachk
