#include <vector>

#include "doctest.h"
#include "parachk/error.hpp"
#include "parachk/model.hpp"

using namespace parachk;

TEST_CASE("evaluate a z3-style model") {
  Model m = Model::parse(R"(
    (
      (define-fun y0_0 () Int
        2)
      (define-fun k!0 ((x!0 Int)) Int
        (ite (<= 1 x!0) (ite (<= 2 x!0) 2 1) 0))
      (define-fun pos ((x!0 Int) (x!1 Int)) Int
        (let ((a!1 (ite (and (= x!0 3) (= (k!0 x!1) 0)) 2 (- 1))))
          (ite (= x!0 2) (- x!0 x!1 1) a!1)))
    ))");
  CHECK(m.defines("pos"));
  CHECK(m.eval("y0_0", {}) == 2);
  std::vector<std::int64_t> args{2, 0};
  CHECK(m.eval("pos", args) == 1);
  args = {3, 0};
  CHECK(m.eval("pos", args) == 2);
  args = {3, 1};
  CHECK(m.eval("pos", args) == -1);
  CHECK(m.eval("missing", {}) == 0);
}

TEST_CASE("model wrapper, arithmetic and booleans") {
  Model m = Model::parse(R"((model
    ; comment
    (define-fun f ((a Int) (b Int)) Int (+ (* 2 a) (div b 2) (mod (- 7) 3) (abs (- 4))))
    (define-fun g ((a Int)) Bool (and (>= a 0) (not (distinct a 3)) (=> true (<= a 3))))
    (define-fun |quoted name| () Int 5)
  ))");
  std::vector<std::int64_t> ab{1, 5};
  CHECK(m.eval("f", ab) == 2 + 2 + 2 + 4);
  std::vector<std::int64_t> three{3};
  CHECK(m.eval("g", three) == 1);
  std::vector<std::int64_t> two{2};
  CHECK(m.eval("g", two) == 0);
  CHECK(m.eval("quoted name", {}) == 5);
}

TEST_CASE("malformed models") {
  CHECK_THROWS_AS(Model::parse("((define-fun f () Int 1)"), ParseError);
  CHECK_THROWS_AS(Model::parse(")"), ParseError);
  Model m = Model::parse("((define-fun f ((x Int)) Int (frobnicate x)))");
  std::vector<std::int64_t> one{1};
  CHECK_THROWS_AS(m.eval("f", one), ParseError);
  CHECK_THROWS_AS(m.eval("f", {}), ParseError);
}
