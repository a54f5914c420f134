#pragma once

// The embedded benchmark: sixteen list functions, each as a foldr
// realizability problem with a shape-complete example set.

#include <string>
#include <vector>

#include "parachk/problem.hpp"

namespace parachk {

struct BenchEntry {
  std::string name;
  Problem sc;            // shape-complete example set
  Problem si;            // every other example of `sc`
  bool expected = true;  // realizable as a fold?
};

/// Keeps examples 0, 2, 4, ...
Problem every_other(const Problem& p);

const std::vector<BenchEntry>& benchmark_corpus();

}  // namespace parachk
