#include "doctest.h"
#include "helpers.hpp"
#include "parachk/check.hpp"
#include "parachk/error.hpp"
#include "parachk/witness.hpp"

using namespace parachk;
using namespace parachk::testing;

namespace {
Problem data(const char* name) { return load_problem(std::string(PARACHK_DATA_DIR) + "/" + name); }
}  // namespace

TEST_CASE("reverse as map is unrealizable") {
  CheckResult r = check(data("reverse_map.json"), test_solver());
  CHECK(kind_of(r.verdict) == VerdictKind::Unrealizable);
  CHECK(r.solver_calls == 1);
  CHECK_FALSE(r.fast_path);
}

TEST_CASE("reverse and sum as foldr are realizable") {
  for (const char* name : {"reverse_foldr.json", "sum_foldr.json", "reverse_raw.json"}) {
    CAPTURE(name);
    CheckResult r = check(data(name), test_solver());
    REQUIRE(std::holds_alternative<Realizable>(r.verdict));
    CHECK(check_witness(std::get<Realizable>(r.verdict).witness, r.constraints));
  }
}

TEST_CASE("tail from two examples is unrealizable") {
  CheckResult r = check(data("tail_minimal.json"), test_solver());
  CHECK(kind_of(r.verdict) == VerdictKind::Unrealizable);
}

TEST_CASE("propagation refutations never start the solver") {
  SolverConfig bogus;
  bogus.command = "/nonexistent/solver-binary";
  Problem p = list_fold({">A"});
  CheckResult r = check(p, bogus);
  CHECK(r.fast_path);
  CHECK(r.solver_calls == 0);
  CHECK(kind_of(r.verdict) == VerdictKind::Unrealizable);
  CHECK_THROWS_AS(check(data("f_a_c.json"), bogus), SolverError);
}

TEST_CASE("problem options override the base config") {
  Problem p = data("f_a_c.json");
  SolverConfig base;
  p.options.timeout_ms = 1234;
  SolverConfig cfg = resolve_config(p, base);
  CHECK(cfg.timeout_ms == 1234);
  CHECK(cfg.command == base.command);
  p.options.solver = "z3 -in -smt2";
  CHECK(resolve_config(p, base).command == "z3 -in -smt2");
}

TEST_CASE("emit_smt matches what check sends") {
  Problem p = data("f_a_c.json");
  CHECK(emit_smt(p).text() == encode(propagate(p)).text());
}
