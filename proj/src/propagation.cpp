#include "parachk/propagation.hpp"

#include <map>
#include <set>

#include "parachk/error.hpp"

namespace parachk {

Functor ConstraintSet::input_functor() const {
  Functor f = input_parts.back();
  for (auto it = input_parts.rbegin() + 1; it != input_parts.rend(); ++it) f = Functor::prod(*it, f);
  return f;
}

namespace {

void require_sketch(const Problem& p, SketchKind kind) {
  if (p.sketch != kind)
    throw ValidationError("problem '" + p.name + "' has sketch " + to_string(p.sketch) + ", expected " +
                          to_string(kind));
}

ConstraintSet skeleton(const Problem& p) {
  ConstraintSet cs;
  cs.sketch = p.sketch;
  cs.output_functor = p.signature.result;
  cs.atoms = p.atoms;
  return cs;
}

}  // namespace

ConstraintSet propagate_raw(const Problem& p) {
  require_sketch(p, SketchKind::Raw);
  validate_problem(p);
  ConstraintSet cs = skeleton(p);
  cs.input_parts = {p.signature.element};
  for (std::size_t i = 0; i < p.examples.size(); ++i) {
    const auto& ex = p.examples[i];
    cs.constraints.push_back({{to_extension(p.signature.element, ex.inputs.front())},
                              to_extension(p.signature.result, ex.output),
                              static_cast<int>(i),
                              0});
  }
  return cs;
}

ConstraintSet propagate_map(const Problem& p) {
  require_sketch(p, SketchKind::Map);
  validate_problem(p);
  ConstraintSet cs = skeleton(p);
  cs.input_parts = {p.signature.element};
  for (std::size_t i = 0; i < p.examples.size(); ++i) {
    const auto& ex = p.examples[i];
    const auto& outs = ex.output.items();
    if (outs.size() != ex.inputs.size()) {
      // map preserves the length of the outer list
      cs.refutation = "example " + std::to_string(i) + ": map cannot turn a list of length " +
                      std::to_string(ex.inputs.size()) + " into one of length " +
                      std::to_string(outs.size());
      cs.constraints.clear();
      return cs;
    }
    for (std::size_t k = 0; k < outs.size(); ++k)
      cs.constraints.push_back({{to_extension(p.signature.element, ex.inputs[k])},
                                to_extension(p.signature.result, outs[k]),
                                static_cast<int>(i),
                                static_cast<int>(k)});
  }
  return cs;
}

ConstraintSet propagate_foldr(const Problem& p) {
  require_sketch(p, SketchKind::Foldr);
  validate_problem(p);
  ConstraintSet cs = skeleton(p);
  const Signature& sig = p.signature;
  cs.input_parts = {sig.extra, sig.element, sig.result};
  for (std::size_t i = 0; i < p.examples.size(); ++i) {
    const auto& ex = p.examples[i];
    const std::size_t n = ex.inputs.size();
    if (n == 0) {
      if (!(*ex.base == ex.output)) {
        cs.refutation = "example " + std::to_string(i) + ": empty input, but base " +
                        ex.base->str(&p.atoms) + " differs from output " + ex.output.str(&p.atoms);
        cs.constraints.clear();
        return cs;
      }
      continue;
    }
    Extension extra = to_extension(sig.extra, ex.extra);
    // inputs are [x_{n-1}, ..., x_0]; constraint i is f (x, x_i, y_i) = y_{i+1}
    SymbolicContainer previous = to_extension(sig.result, *ex.base);
    for (std::size_t step = 0; step < n; ++step) {
      const Value& element = ex.inputs[n - 1 - step];
      SymbolicContainer next;
      if (step + 1 == n)
        next = to_extension(sig.result, ex.output);
      else
        next = Intermediate{cs.intermediates++};
      cs.constraints.push_back({{extra, to_extension(sig.element, element), previous},
                                next,
                                static_cast<int>(i),
                                static_cast<int>(step)});
      previous = next;
    }
  }
  return cs;
}

ConstraintSet propagate(const Problem& p) {
  switch (p.sketch) {
    case SketchKind::Raw: return propagate_raw(p);
    case SketchKind::Map: return propagate_map(p);
    case SketchKind::Foldr: return propagate_foldr(p);
  }
  throw ValidationError("unknown sketch");
}

Completeness shape_complete(const Problem& p) {
  require_sketch(p, SketchKind::Foldr);
  using Key = std::pair<Shape, std::vector<Shape>>;
  std::set<Key> present;
  std::vector<Key> keys;
  for (const auto& ex : p.examples) {
    std::vector<Shape> shapes;
    for (const auto& v : ex.inputs) shapes.push_back(shape_of(p.signature.element, v));
    Key key{shape_of(p.signature.extra, ex.extra), shapes};
    present.insert(key);
    keys.push_back(std::move(key));
  }
  Completeness result;
  std::set<Key> reported;
  for (const auto& [extra, shapes] : keys) {
    for (std::size_t k = shapes.size(); k-- > 1;) {
      Key suffix{extra, std::vector<Shape>(shapes.end() - static_cast<std::ptrdiff_t>(k), shapes.end())};
      if (present.count(suffix) || !reported.insert(suffix).second) continue;
      std::string text = "extra " + extra.str() + ", inputs [";
      for (std::size_t j = 0; j < suffix.second.size(); ++j) {
        if (j) text += ",";
        text += suffix.second[j].str();
      }
      result.missing.push_back(text + "]");
    }
  }
  result.complete = result.missing.empty();
  return result;
}

}  // namespace parachk
