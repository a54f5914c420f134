#pragma once

// Randomized property suites, shared by the unit tests and the acceptance
// binary.

#include <cstdint>
#include <string>

#include "parachk/solver.hpp"

namespace parachk::testing {

struct PropertyReport {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool passed(int min_cases) const { return cases >= min_cases && failures == 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

PropertyReport prop_extension_roundtrip(std::uint64_t seed, int cases);
PropertyReport prop_schema_coherence(std::uint64_t seed, int cases);
PropertyReport prop_relabel_invariance(std::uint64_t seed, int cases, const SolverConfig& cfg);
PropertyReport prop_order_invariance(std::uint64_t seed, int cases, const SolverConfig& cfg);
/// `cases` counts Unrealizable starting points.
PropertyReport prop_unrealizable_monotone(std::uint64_t seed, int cases, const SolverConfig& cfg);
PropertyReport prop_constant_extra(std::uint64_t seed, int cases, const SolverConfig& cfg);

}  // namespace parachk::testing
