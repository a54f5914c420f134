#pragma once

// Fixed-arity integer encodings of functor shapes.
//
// A shape of a supported functor flattens to a vector of integer slots. The
// schema carries a refinement predicate over the slots (which slot vectors
// are shapes at all) and the position count as a piecewise-linear term.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "parachk/functor.hpp"

namespace parachk {

/// Integer/boolean expression over the slots of one schema. Booleans
/// evaluate to 0/1.
class SlotExpr {
 public:
  enum class Op { True, Const, Slot, Add, Mul, Ite, Eq, Le, Lt, And, Implies };

  static SlotExpr constant(std::int64_t value);
  static SlotExpr slot(std::size_t index);
  static SlotExpr add(SlotExpr a, SlotExpr b);
  static SlotExpr scale(std::int64_t factor, SlotExpr a);
  static SlotExpr ite(SlotExpr cond, SlotExpr then_branch, SlotExpr else_branch);
  static SlotExpr eq(SlotExpr a, SlotExpr b);
  static SlotExpr le(SlotExpr a, SlotExpr b);
  static SlotExpr lt(SlotExpr a, SlotExpr b);
  static SlotExpr conj(std::vector<SlotExpr> parts);
  static SlotExpr implies(SlotExpr a, SlotExpr b);
  static SlotExpr truth();

  Op op() const;
  /// Copy with every slot index shifted by `offset`.
  SlotExpr shifted(std::size_t offset) const;
  std::int64_t evaluate(std::span<const std::int64_t> slots) const;
  /// SMT-LIB2 rendering with slot i written as `names[i]`.
  std::string to_smt(std::span<const std::string> names) const;

 private:
  struct Node;
  explicit SlotExpr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

struct SlotInfo {
  enum class Kind { Length, Int, Bool, Presence };
  Kind kind;
  std::string name;  // descriptive, e.g. "len", "snd.len", "just"
};

struct ShapeSchema {
  std::vector<SlotInfo> slots;
  SlotExpr refinement = SlotExpr::truth();
  SlotExpr count = SlotExpr::constant(0);
};

/// Throws UnsupportedFunctor when `f` contains `List(g)` where `g` has a
/// shape of its own (so the slot count would depend on the value).
ShapeSchema flatten_shape(const Functor& f);
/// True iff flatten_shape(f) succeeds.
bool has_fixed_arity(const Functor& f);
/// Slot values of a concrete shape. Absent `Maybe` children contribute zeros.
std::vector<std::int64_t> flatten_value(const Functor& f, const Shape& s);
/// Inverse of flatten_value. Throws TypeError when the slots violate the
/// refinement.
Shape unflatten_shape(const Functor& f, std::span<const std::int64_t> slots);

}  // namespace parachk
