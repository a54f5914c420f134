#include "doctest.h"
#include "helpers.hpp"
#include "parachk/error.hpp"
#include "parachk/solver.hpp"

using namespace parachk;
using Status = RawResult::Status;

TEST_CASE("z3 answers sat with a model and unsat") {
  SolverConfig cfg = testing::test_solver();
  RawResult sat = run_solver("(declare-fun x () Int)\n(assert (> x 3))\n(check-sat)\n(get-model)\n", cfg);
  CHECK(sat.status == Status::Sat);
  CHECK(sat.model.find("define-fun x") != std::string::npos);
  RawResult unsat = run_solver("(assert false)\n(check-sat)\n", cfg);
  CHECK(unsat.status == Status::Unsat);
  CHECK(to_string(Status::Unsat) == "unsat");
}

TEST_CASE("a hung solver is killed at the deadline") {
  SolverConfig cfg;
  cfg.command = "sleep 5";
  cfg.timeout_ms = 200;
  RawResult r = run_solver("(check-sat)\n", cfg);
  CHECK(r.status == Status::Timeout);
  CHECK(r.elapsed_ms < 2000);
}

TEST_CASE("missing and misbehaving solvers") {
  SolverConfig cfg;
  cfg.command = "/nonexistent/solver-binary";
  CHECK_THROWS_AS(run_solver("(check-sat)\n", cfg), SolverError);
  cfg.command = "echo hello";
  RawResult r = run_solver("(check-sat)\n", cfg);
  CHECK(r.status == Status::Error);
  CHECK(r.output.find("hello") != std::string::npos);
}
