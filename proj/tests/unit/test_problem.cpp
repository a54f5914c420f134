#include <string>

#include "doctest.h"
#include "parachk/error.hpp"
#include "parachk/problem.hpp"

using namespace parachk;

namespace {
const char* kTail = R"J({
  "name": "tail",
  "signature": {"element": "Id", "result": "List(Id)"},
  "sketch": "foldr",
  "examples": [
    {"inputs": [{"atom": "A"}, {"atom": "B"}], "output": {"list": [{"atom": "B"}]}, "base": {"list": []}}
  ]
})J";
}  // namespace

TEST_CASE("parse a foldr problem") {
  Problem p = parse_problem(kTail);
  CHECK(p.name == "tail");
  CHECK(p.sketch == SketchKind::Foldr);
  CHECK(p.signature.extra == Functor::unit());
  CHECK(p.signature.result.str() == "List(Id)");
  REQUIRE(p.examples.size() == 1);
  CHECK(p.examples[0].inputs.size() == 2);
  CHECK(p.examples[0].output.str(&p.atoms) == "[B]");
  CHECK(p.atoms.size() == 2);
}

TEST_CASE("serialize then parse is the identity") {
  Problem p = parse_problem(kTail);
  std::string text = serialize_problem(p);
  Problem q = parse_problem(text);
  CHECK(serialize_problem(q) == text);
  CHECK(q.examples[0].output == p.examples[0].output);
}

TEST_CASE("every value form parses") {
  Problem p = parse_problem(R"J({
    "name": "values",
    "signature": {"element": "Prod(Prod(Int,Bool),Prod(Unit,Maybe(Id)))", "result": "Maybe(Id)"},
    "sketch": "raw",
    "examples": [
      {"inputs": [{"pair": [{"pair": [{"int": -2}, {"bool": false}]}, {"pair": ["unit", {"just": {"atom": "X"}}]}]}],
       "output": "nothing"}
    ],
    "options": {"timeout_ms": 500, "solver": "z3 -in"}
  })J");
  CHECK(p.examples[0].inputs[0].str(&p.atoms) == "((-2,false),((),Just X))");
  CHECK(*p.options.timeout_ms == 500);
}

TEST_CASE("unknown fields are rejected with their location") {
  try {
    parse_problem(R"J({"name": "x", "signature": {"element": "Id", "result": "Id"}, "sketch": "raw",
                      "examples": [{"inputs": [{"atom": "A"}], "output": {"atom": "A"}, "typo": 1}]})J");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.where() == "$.examples[0]");
    CHECK(std::string(e.what()).find("typo") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_problem("{not json"), ParseError);
  CHECK_THROWS_AS(parse_problem(R"J({"name": "x", "signature": {"element": "Id", "result": "Id"}, "sketch": "fold",
                                   "examples": []})J"),
                  ParseError);
}

TEST_CASE("validation") {
  auto raw = [](const char* examples) {
    return std::string(R"J({"name": "x", "signature": {"element": "Id", "result": "Id"}, "sketch": "raw", "examples": )J") +
           examples + "}";
  };
  CHECK_THROWS_AS(parse_problem(raw("[]")), ValidationError);
  CHECK_THROWS_AS(parse_problem(raw(R"J([{"inputs": [{"atom": "A"}, {"atom": "B"}], "output": {"atom": "A"}}])J")),
                  ValidationError);
  CHECK_THROWS_AS(parse_problem(raw(R"J([{"inputs": [{"int": 1}], "output": {"atom": "A"}}])J")), TypeError);
  CHECK_THROWS_AS(parse_problem(R"J({"name": "x", "signature": {"element": "Id", "result": "List(Id)"},
      "sketch": "foldr", "examples": [{"inputs": [], "output": {"list": []}}]})J"),
                  ValidationError);
  // the base is e x: equal extras need equal bases
  CHECK_THROWS_AS(parse_problem(R"J({"name": "x", "signature": {"extra": "Int", "element": "Id", "result": "Int"},
      "sketch": "foldr", "examples": [
        {"extra": {"int": 1}, "inputs": [], "output": {"int": 0}, "base": {"int": 0}},
        {"extra": {"int": 1}, "inputs": [], "output": {"int": 2}, "base": {"int": 2}}]})J"),
                  ValidationError);
  CHECK_THROWS_AS(parse_problem(R"J({"name": "x", "signature": {"extra": "Int", "element": "Id", "result": "Id"},
      "sketch": "raw", "examples": [{"inputs": [{"atom": "A"}], "output": {"atom": "A"}}]})J"),
                  ValidationError);
}

TEST_CASE("type errors name the example and field") {
  try {
    parse_problem(R"J({"name": "x", "signature": {"element": "Id", "result": "Id"}, "sketch": "map",
                      "examples": [{"inputs": [{"atom": "A"}], "output": {"list": [{"atom": "A"}]}},
                                   {"inputs": [{"atom": "A"}], "output": {"atom": "A"}}]})J");
    FAIL("expected TypeError");
  } catch (const TypeError& e) {
    CHECK(std::string(e.what()).find("example 1") != std::string::npos);
    CHECK(std::string(e.what()).find("output") != std::string::npos);
  }
}

TEST_CASE("missing file") { CHECK_THROWS_AS(load_problem("/nonexistent/problem.json"), Error); }

TEST_CASE("intern_atoms renumbers by first occurrence") {
  Problem p = parse_problem(kTail);
  map_atoms(p, [](Atom a) { return Atom{a.code + 10}; });
  p.atoms = AtomTable{};
  for (int i = 0; i < 12; ++i) p.atoms.intern("x" + std::to_string(i));
  intern_atoms(p);
  CHECK(p.atoms.size() == 2);
  CHECK(p.examples[0].inputs[0].as_atom().code == 0);
  CHECK(p.examples[0].inputs[1].as_atom().code == 1);
}
