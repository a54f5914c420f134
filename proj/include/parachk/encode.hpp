#pragma once

// SMT-LIB2 encoding of a ConstraintSet.
//
// The hole f becomes a container morphism (u, g): one uninterpreted
// function u_j per output-shape slot and one position function `pos` from
// (input shape slots, output position) to an input position, numbered with
// the offset encoding over the input parts. Each foldr intermediate k gets
// shape-slot constants y<k>_<j> and an element function y<k>_el. Every
// application of pos or y<k>_el is guarded by the dependency bound of its
// argument; intermediate shape slots are constrained by their refinement.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parachk/propagation.hpp"

namespace parachk {

struct SmtScript {
  std::string logic;
  std::vector<std::string> options;
  std::vector<std::string> declarations;
  std::vector<std::string> assertions;  // one (assert ...) command each
  bool get_model = true;
  std::size_t quantifiers = 0;

  std::string text() const;
};

struct EncodeOptions {
  /// Besides the quantified position constraint of an intermediate output,
  /// also emit its ground instances for positions below the largest known
  /// output size. They are implied by the quantifier.
  bool instantiation_hints = true;
  bool produce_model = true;
  /// Extra assertions capping every intermediate's position count and list
  /// lengths. This strengthens the formula: sat still proves
  /// realizability, unsat proves nothing.
  std::optional<std::int64_t> intermediate_bound;
};

/// Largest position count or list length among the concrete containers of
/// the output type; intermediates of a shape-complete set never exceed it.
std::int64_t small_model_bound(const ConstraintSet& cs);

/// Throws UnsupportedFunctor if the output functor has no fixed-arity
/// schema, or if an input part that hosts intermediates has none.
SmtScript encode(const ConstraintSet& cs, const EncodeOptions& options = {});

}  // namespace parachk
