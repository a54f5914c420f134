#pragma once

// Realizability problems: a signature, a sketch, and monomorphic examples.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parachk/functor.hpp"

namespace parachk {

enum class SketchKind { Raw, Map, Foldr };

std::string to_string(SketchKind kind);

/// Raw: f : forall a. F a -> G a.
/// Map: p : forall a. [F a] -> [G a] with p = map f.
/// Foldr: p : forall a. H a x [F a] -> G a with
///        p (x, ys) = foldr (f x) (e x) ys.
struct Signature {
  Functor extra = Functor::unit();  // H
  Functor element = Functor::id();  // F
  Functor result = Functor::id();   // G
};

struct IOExample {
  Value extra = Value::unit();
  /// Raw: exactly one F value. Map/Foldr: the list elements, in order.
  std::vector<Value> inputs;
  /// Raw/Foldr: a G value. Map: a list of G values.
  Value output;
  /// Foldr only: the value of `e x` for this example's extra argument.
  std::optional<Value> base;
};

struct ProblemOptions {
  std::optional<int> timeout_ms;
  std::optional<std::string> solver;
};

struct Problem {
  std::string name;
  Signature signature;
  SketchKind sketch = SketchKind::Raw;
  std::vector<IOExample> examples;
  AtomTable atoms;
  ProblemOptions options;
};

/// Parses and validates a JSON problem document. Throws ParseError,
/// TypeError or ValidationError.
Problem parse_problem(std::string_view text);
Problem load_problem(const std::filesystem::path& path);
/// Canonical JSON form; parse(serialize(p)) == p up to atom renumbering.
std::string serialize_problem(const Problem& p);

/// Checks every structural invariant of `p`; throws on the first violation.
void validate_problem(const Problem& p);

/// Renumbers atoms densely in order of first occurrence (extra, inputs,
/// output, base per example) and rewrites every value accordingly.
AtomTable intern_atoms(Problem& p);

/// Applies `rename` to every atom of every example value.
template <typename Fn>
void map_atoms(Problem& p, Fn&& rename);

// -- implementation details -------------------------------------------------

namespace detail {
template <typename Fn>
Value map_value_atoms(const Value& v, Fn& rename) {
  switch (v.kind()) {
    case Value::Kind::Atom: return Value::atom(rename(v.as_atom()));
    case Value::Kind::List: {
      std::vector<Value> items;
      items.reserve(v.items().size());
      for (const auto& item : v.items()) items.push_back(map_value_atoms(item, rename));
      return Value::list(std::move(items));
    }
    case Value::Kind::Pair:
      return Value::pair(map_value_atoms(v.first(), rename), map_value_atoms(v.second(), rename));
    case Value::Kind::Just: return Value::just(map_value_atoms(v.payload(), rename));
    default: return v;
  }
}
}  // namespace detail

template <typename Fn>
void map_atoms(Problem& p, Fn&& rename) {
  for (auto& ex : p.examples) {
    ex.extra = detail::map_value_atoms(ex.extra, rename);
    for (auto& in : ex.inputs) in = detail::map_value_atoms(in, rename);
    ex.output = detail::map_value_atoms(ex.output, rename);
    if (ex.base) ex.base = detail::map_value_atoms(*ex.base, rename);
  }
}

}  // namespace parachk
