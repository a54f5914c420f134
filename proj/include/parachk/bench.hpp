#pragma once

// Runs the embedded corpus in both regimes and renders the result table.

#include <optional>
#include <string>
#include <vector>

#include "parachk/corpus.hpp"
#include "parachk/solver.hpp"
#include "parachk/verdict.hpp"

namespace parachk {

struct BenchOptions {
  SolverConfig solver = default_solver_config();
  int repeat = 1;
  std::vector<std::string> only;  // empty: all entries
  bool parallel = false;          // rows through check_batch
};

struct RegimeResult {
  std::string verdict;  // describe() of the last run, or "error: ..."
  VerdictKind kind = VerdictKind::Unknown;
  double ms = 0;        // mean over the repeats
  bool ok = false;      // every repeat matched
  bool error = false;
};

struct BenchRow {
  std::string name;
  bool expected = true;
  RegimeResult sc;
  RegimeResult si;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  int repeat = 1;
  int timeout_ms = 0;
  double total_ms = 0;

  int sc_matches() const;
  int si_matches() const;  // SI equal to expected (Unknown not counted)
  /// Every SC verdict is the expected one and every SI verdict is the
  /// expected one or Unknown.
  bool passed() const;
};

/// Throws Error for names in `only` that are not in the corpus.
BenchReport run_bench(const BenchOptions& options);

std::string format_table(const BenchReport& r);
std::string format_json(const BenchReport& r);

}  // namespace parachk
