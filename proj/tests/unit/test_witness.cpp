#include "doctest.h"
#include "helpers.hpp"
#include "parachk/witness.hpp"

using namespace parachk;
using namespace parachk::testing;

namespace {
const char* kReverseModel = R"((
  (define-fun u_0 ((x!0 Int)) Int x!0)
  (define-fun pos ((x!0 Int) (x!1 Int)) Int (- x!0 x!1 1))
))";

ConstraintSet sum_constraints() {
  Problem p;
  p.sketch = SketchKind::Foldr;
  p.signature = {Functor::unit(), Functor::integer(), Functor::integer()};
  p.examples.push_back({Value::unit(), {Value::integer(2), Value::integer(3), Value::integer(4)},
                        Value::integer(10), Value::integer(1)});
  return propagate(p);
}

std::string sum_model(int y0) {
  return "((define-fun y0_0 () Int " + std::to_string(y0) +
         ")\n (define-fun y1_0 () Int 8)\n (define-fun u_0 ((a Int) (b Int)) Int (+ a b)))";
}
}  // namespace

TEST_CASE("reverse model validates on raw reverse") {
  ConstraintSet cs = propagate(list_raw({"ABC>CBA", "DE>ED", ">"}));
  std::string why;
  CHECK(validate_witness(kReverseModel, cs, &why));
  WitnessSummary w = witness_from_model(Model::parse(kReverseModel), cs);
  CHECK(w.shape_table.size() == 3);
  InputShape three{Shape::list(3, Shape::id())};
  REQUIRE(w.position_table.count(three));
  CHECK(w.position_table.at(three) == std::vector<std::int64_t>{2, 1, 0});
  CHECK(format_witness(w, cs).find("0<-2 1<-1 2<-0") != std::string::npos);
}

TEST_CASE("a corrupted position function is rejected") {
  ConstraintSet cs = propagate(list_raw({"ABC>CBA", "DE>ED"}));
  std::string bad = R"(((define-fun u_0 ((x!0 Int)) Int x!0)
                       (define-fun pos ((x!0 Int) (x!1 Int)) Int x!1)))";
  std::string why;
  CHECK_FALSE(validate_witness(bad, cs, &why));
  CHECK(!why.empty());
  std::string out_of_range = R"(((define-fun u_0 ((x!0 Int)) Int x!0)
                                (define-fun pos ((x!0 Int) (x!1 Int)) Int 7)))";
  CHECK_FALSE(validate_witness(out_of_range, cs));
  CHECK_FALSE(validate_witness("((broken", cs));
}

TEST_CASE("sum as foldr: intermediates are read off the model") {
  ConstraintSet cs = sum_constraints();
  REQUIRE(cs.intermediates == 2);
  std::string why;
  CHECK_MESSAGE(validate_witness(sum_model(5), cs, &why), why);
  WitnessSummary w = witness_from_model(Model::parse(sum_model(5)), cs);
  CHECK(w.intermediates.size() == 2);
  CHECK_FALSE(validate_witness(sum_model(6), cs));
}

TEST_CASE("interpret maps solver answers to verdicts") {
  ConstraintSet cs = propagate(list_raw({"ABC>CBA", "DE>ED"}));
  RawResult r;
  r.status = RawResult::Status::Unsat;
  CHECK(kind_of(interpret(r, cs)) == VerdictKind::Unrealizable);
  r.status = RawResult::Status::Timeout;
  CHECK(describe(interpret(r, cs)) == "Unknown(timeout)");
  r.status = RawResult::Status::Unknown;
  CHECK(std::get<Unknown>(interpret(r, cs)).reason == UnknownReason::SolverUnknown);
  r.status = RawResult::Status::Sat;
  r.model = kReverseModel;
  CHECK(kind_of(interpret(r, cs)) == VerdictKind::Realizable);
  r.model = "((define-fun pos ((x!0 Int) (x!1 Int)) Int 0))";
  auto v = interpret(r, cs);
  REQUIRE(std::holds_alternative<Unknown>(v));
  CHECK(std::get<Unknown>(v).reason == UnknownReason::WitnessValidationFailed);
}
