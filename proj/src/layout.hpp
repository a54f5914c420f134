#pragma once

// Slot layout of the morphism's input and output, shared by the encoder and
// by model decoding so both agree on argument order.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parachk/propagation.hpp"
#include "parachk/schema.hpp"

namespace parachk::detail {

struct PartLayout {
  Functor functor;
  /// Fixed-arity schema; absent for parts that are always concrete but
  /// whose shape has no fixed arity (e.g. List(List(Id))).
  std::optional<ShapeSchema> schema;
  /// For schema-less parts: concrete shape -> opaque code.
  std::map<Shape, std::int64_t> codes;

  std::size_t width() const { return schema ? schema->slots.size() : 1; }
  std::vector<std::int64_t> slots_of(const Shape& s) const;
};

struct Layout {
  std::vector<PartLayout> parts;
  ShapeSchema output;
  std::size_t input_width = 0;
  /// Largest position count among concrete output-typed containers.
  std::int64_t max_known_output = 0;
};

Layout make_layout(const ConstraintSet& cs);

inline std::string shape_slot_name(int intermediate, std::size_t slot) {
  return "y" + std::to_string(intermediate) + "_" + std::to_string(slot);
}

inline std::string element_fn_name(int intermediate) {
  return "y" + std::to_string(intermediate) + "_el";
}

inline std::string shape_fn_name(std::size_t slot) { return "u_" + std::to_string(slot); }

inline constexpr const char* kPositionFn = "pos";

}  // namespace parachk::detail
