#include "parachk/check.hpp"

#include <algorithm>
#include <chrono>

#include "parachk/error.hpp"
#include "parachk/witness.hpp"

namespace parachk {

SolverConfig resolve_config(const Problem& p, SolverConfig base) {
  if (p.options.timeout_ms) base.timeout_ms = *p.options.timeout_ms;
  if (p.options.solver) base.command = *p.options.solver;
  return base;
}

CheckResult check(const Problem& p, const SolverConfig& cfg, const EncodeOptions& options) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  auto since_start = [&] { return std::chrono::duration<double, std::milli>(Clock::now() - start).count(); };
  validate_problem(p);
  CheckResult result{Unknown{}, propagate(p), 0, 0, false, std::nullopt, 0};
  const ConstraintSet& cs = result.constraints;
  auto finish = [&]() -> CheckResult {
    result.elapsed_ms = since_start();
    return std::move(result);
  };
  if (cs.refutation) {
    result.verdict = Unrealizable{*cs.refutation};
    result.fast_path = true;
    return finish();
  }

  auto solve = [&](const EncodeOptions& opts, int timeout_ms) {
    SolverConfig c = cfg;
    c.timeout_ms = std::max(1, timeout_ms);
    RawResult raw = run_solver(encode(cs, opts), c);
    if (raw.status == RawResult::Status::Error) throw SolverError("solver failed: " + raw.output);
    result.solver_ms += raw.elapsed_ms;
    result.solver_status = raw.status;
    ++result.solver_calls;
    return raw;
  };

  EncodeOptions opts = options;
  opts.produce_model = true;
  if (cs.intermediates > 0 && !opts.intermediate_bound) {
    EncodeOptions small = opts;
    small.intermediate_bound = small_model_bound(cs);
    RawResult raw = solve(small, cfg.timeout_ms / 2);
    if (raw.status == RawResult::Status::Sat) {
      Verdict v = interpret(raw, cs);
      if (kind_of(v) == VerdictKind::Realizable) {
        result.verdict = std::move(v);
        return finish();
      }
    }
  }
  int remaining = cfg.timeout_ms - static_cast<int>(since_start());
  result.verdict = interpret(solve(opts, remaining), cs);
  return finish();
}

SmtScript emit_smt(const Problem& p, const EncodeOptions& options) {
  validate_problem(p);
  return encode(propagate(p), options);
}

}  // namespace parachk
