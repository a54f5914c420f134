#pragma once

// External SMT solver driver. One subprocess per call, fed the script on
// standard input and killed on wall-clock timeout.

#include <string>

#include "parachk/encode.hpp"

namespace parachk {

struct SolverConfig {
  std::string command = "z3 -in";  // run through /bin/sh
  int timeout_ms = 10000;
  bool produce_model = true;
};

/// Default config, with the command taken from PARACHK_SOLVER when set.
SolverConfig default_solver_config();

struct RawResult {
  enum class Status { Sat, Unsat, Unknown, Timeout, Error };
  Status status = Status::Error;
  std::string model;   // text after the status line on sat
  std::string output;  // full standard output, or the error text
  double elapsed_ms = 0;
};

std::string to_string(RawResult::Status s);

/// Throws SolverError if the process cannot be spawned. Solver-side
/// failures come back as Status::Error with the output verbatim.
RawResult run_solver(const std::string& script, const SolverConfig& cfg);
RawResult run_solver(const SmtScript& script, const SolverConfig& cfg);

}  // namespace parachk
