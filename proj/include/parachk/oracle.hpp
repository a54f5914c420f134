#pragma once

// Brute-force decision procedure for shape-complete constraint sets. No
// solver involved: intermediate shapes are chased from forced shape
// equalities, then output positions are assigned by backtracking.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "parachk/problem.hpp"
#include "parachk/propagation.hpp"
#include "parachk/verdict.hpp"

namespace parachk {

/// One fully concrete morphism application. Elements are node ids of
/// GroundInstance::nodes.
struct GroundConstraint {
  InputShape input;
  std::vector<int> input_nodes;  // offset encoding over the input parts
  Shape output;
  std::vector<int> output_nodes;
  int constraint = 0;  // index into the ConstraintSet
};

struct GroundInstance {
  std::vector<GroundConstraint> constraints;
  std::set<InputShape> input_shapes;
  std::map<int, Shape> intermediate_shapes;
  /// Per node: the atom for constant nodes, nothing for element variables.
  std::vector<std::optional<Atom>> nodes;
  /// Per node: (intermediate, position) for element variables.
  std::map<int, std::pair<int, std::size_t>> variables;
  /// Set when two forced output shapes disagree for one input shape.
  std::optional<std::string> conflict;
  Functor output_functor;
};

struct OracleBounds {
  std::size_t max_positions = 16;    // per container
  std::size_t max_input_shapes = 12;
};

/// Throws OracleError if some intermediate shape is not forced.
GroundInstance ground(const ConstraintSet& cs);

/// Throws OracleError when the instance exceeds `bounds`.
Verdict oracle_check(const GroundInstance& g, const OracleBounds& bounds = {});

/// validate, completeness check (foldr), propagate, ground, decide.
/// Throws OracleError for incomplete foldr sets.
Verdict oracle(const Problem& p, const OracleBounds& bounds = {});

}  // namespace parachk
