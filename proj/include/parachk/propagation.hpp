#pragma once

// Example propagation: turns a Problem into morphism-application
// constraints on the hole f of its sketch.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "parachk/functor.hpp"
#include "parachk/problem.hpp"

namespace parachk {

/// Existentially quantified intermediate result of a foldr trace (a G a).
struct Intermediate {
  int id = 0;
  friend bool operator==(const Intermediate&, const Intermediate&) = default;
};

using SymbolicContainer = std::variant<Extension, Intermediate>;

/// f (input[0], input[1], ...) == output, where the input tuple lives in
/// the product of ConstraintSet::input_parts.
struct MorphismConstraint {
  std::vector<SymbolicContainer> input;
  SymbolicContainer output;
  int example = 0;  // index of the originating example
  int step = 0;     // map: list index; foldr: i in f (x_i, y_i) = y_{i+1}
};

struct ConstraintSet {
  SketchKind sketch = SketchKind::Raw;
  /// Raw/Map: {F}. Foldr: {H, F, G}; positions are numbered H, F, G block
  /// by block.
  std::vector<Functor> input_parts;
  Functor output_functor;
  std::vector<MorphismConstraint> constraints;
  int intermediates = 0;
  AtomTable atoms;
  /// Set when propagation alone already refutes the problem (map length
  /// mismatch, empty foldr input whose base differs from its output).
  std::optional<std::string> refutation;

  /// Product of the input parts, nested to the right.
  Functor input_functor() const;
};

ConstraintSet propagate_raw(const Problem& p);
ConstraintSet propagate_map(const Problem& p);
ConstraintSet propagate_foldr(const Problem& p);
/// Dispatches on p.sketch.
ConstraintSet propagate(const Problem& p);

struct Completeness {
  bool complete = true;
  /// One entry per absent (extra shape, input-shape suffix) pair.
  std::vector<std::string> missing;
};

/// Foldr only: every proper non-empty suffix of every example's input-shape
/// sequence must itself occur as the full input-shape sequence of an
/// example with the same extra-argument shape.
Completeness shape_complete(const Problem& p);

}  // namespace parachk
