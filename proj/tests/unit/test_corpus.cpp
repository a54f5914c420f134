#include <set>

#include "doctest.h"
#include "parachk/corpus.hpp"
#include "parachk/propagation.hpp"

using namespace parachk;

TEST_CASE("sixteen distinct functions, four of them not folds") {
  const auto& corpus = benchmark_corpus();
  REQUIRE(corpus.size() == 16);
  std::set<std::string> names;
  int unrealizable = 0;
  for (const auto& e : corpus) {
    names.insert(e.name);
    if (!e.expected) ++unrealizable;
  }
  CHECK(names.size() == 16);
  CHECK(names.count("reverse"));
  CHECK(names.count("tail"));
  CHECK(unrealizable == 4);
}

TEST_CASE("every SC set is shape complete and SI halves it") {
  for (const auto& e : benchmark_corpus()) {
    CAPTURE(e.name);
    CHECK_NOTHROW(validate_problem(e.sc));
    CHECK(shape_complete(e.sc).complete);
    CHECK(e.sc.examples.size() >= 4);
    CHECK(e.sc.examples.size() <= 10);
    REQUIRE(e.si.examples.size() == (e.sc.examples.size() + 1) / 2);
    for (std::size_t i = 0; i < e.si.examples.size(); ++i)
      CHECK(e.si.examples[i].output == e.sc.examples[2 * i].output);
  }
}
