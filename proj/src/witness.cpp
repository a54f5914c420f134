#include "parachk/witness.hpp"

#include <sstream>

#include "layout.hpp"
#include "parachk/error.hpp"
#include "parachk/schema.hpp"

namespace parachk {

namespace {

// Keeps a hostile model from making us enumerate billions of positions.
constexpr std::size_t kMaxWitnessPositions = 1 << 20;

std::string shape_key_str(const InputShape& in) {
  std::string out = "(";
  for (std::size_t i = 0; i < in.size(); ++i) out += (i ? ", " : "") + in[i].str();
  return out + ")";
}

/// unflatten_shape, refusing shapes too large to enumerate.
Shape bounded_shape(const Functor& f, const ShapeSchema& schema, const std::vector<std::int64_t>& slots) {
  auto too_big = [](std::int64_t v) { return v > static_cast<std::int64_t>(kMaxWitnessPositions); };
  for (std::size_t j = 0; j < slots.size(); ++j)
    if (schema.slots[j].kind == SlotInfo::Kind::Length && too_big(slots[j]))
      throw ValidationError("witness list length " + std::to_string(slots[j]) + " is too large to check");
  if (too_big(schema.count.evaluate(slots)))
    throw ValidationError("witness shape has too many positions to check");
  return unflatten_shape(f, slots);
}

const Extension* resolve(const SymbolicContainer& c, const WitnessSummary& w) {
  if (const auto* e = std::get_if<Extension>(&c)) return e;
  auto it = w.intermediates.find(std::get<Intermediate>(c).id);
  return it == w.intermediates.end() ? nullptr : &it->second;
}

}  // namespace

bool check_witness(const WitnessSummary& w, const ConstraintSet& cs, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (const auto& [k, e] : w.intermediates) {
    if (!is_shape_of(cs.output_functor, e.shape) || size_of(cs.output_functor, e.shape) != e.elements.size())
      return fail("intermediate " + std::to_string(k) + " is not a " + cs.output_functor.str() + " container");
  }
  for (std::size_t ci = 0; ci < cs.constraints.size(); ++ci) {
    const auto& c = cs.constraints[ci];
    const std::string label = "constraint " + std::to_string(ci);
    InputShape key;
    std::vector<Atom> elements;  // input elements under the offset encoding
    for (const auto& part : c.input) {
      const Extension* e = resolve(part, w);
      if (!e) return fail(label + ": unresolved intermediate");
      key.push_back(e->shape);
      elements.insert(elements.end(), e->elements.begin(), e->elements.end());
    }
    const Extension* out = resolve(c.output, w);
    if (!out) return fail(label + ": unresolved intermediate output");
    auto shape = w.shape_table.find(key);
    if (shape == w.shape_table.end()) return fail(label + ": no output shape for " + shape_key_str(key));
    if (!(shape->second == out->shape))
      return fail(label + ": shape " + shape->second.str() + " instead of " + out->shape.str());
    auto positions = w.position_table.find(key);
    if (positions == w.position_table.end() || positions->second.size() < out->elements.size())
      return fail(label + ": output positions of " + shape_key_str(key) + " unmapped");
    for (std::size_t q = 0; q < out->elements.size(); ++q) {
      std::int64_t p = positions->second[q];
      if (p < 0 || p >= static_cast<std::int64_t>(elements.size()))
        return fail(label + ": output position " + std::to_string(q) + " maps outside the input (" +
                    std::to_string(p) + ")");
      if (!(elements[static_cast<std::size_t>(p)] == out->elements[q]))
        return fail(label + ": output position " + std::to_string(q) + " reads the wrong element");
    }
  }
  return true;
}

WitnessSummary witness_from_model(const Model& model, const ConstraintSet& cs) {
  const detail::Layout layout = detail::make_layout(cs);
  const std::size_t out_width = layout.output.slots.size();
  WitnessSummary w;

  for (int k = 0; k < cs.intermediates; ++k) {
    std::vector<std::int64_t> slots;
    for (std::size_t j = 0; j < out_width; ++j) slots.push_back(model.eval(detail::shape_slot_name(k, j), {}));
    Extension e{cs.output_functor, bounded_shape(cs.output_functor, layout.output, slots), {}};
    std::size_t n = size_of(cs.output_functor, e.shape);
    for (std::size_t q = 0; q < n; ++q) {
      std::int64_t arg = static_cast<std::int64_t>(q);
      e.elements.push_back(Atom{model.eval(detail::element_fn_name(k), {&arg, 1})});
    }
    w.intermediates.emplace(k, std::move(e));
  }

  for (const auto& c : cs.constraints) {
    InputShape key;
    std::vector<std::int64_t> args;
    for (std::size_t i = 0; i < c.input.size(); ++i) {
      const Extension* e = resolve(c.input[i], w);
      key.push_back(e->shape);
      for (auto v : layout.parts[i].slots_of(e->shape)) args.push_back(v);
    }
    if (w.shape_table.count(key)) continue;
    std::vector<std::int64_t> out_slots;
    for (std::size_t j = 0; j < out_width; ++j) out_slots.push_back(model.eval(detail::shape_fn_name(j), args));
    Shape out = bounded_shape(cs.output_functor, layout.output, out_slots);
    std::size_t n = size_of(cs.output_functor, out);
    std::vector<std::int64_t> positions(n);
    args.push_back(0);
    for (std::size_t q = 0; q < n; ++q) {
      args.back() = static_cast<std::int64_t>(q);
      positions[q] = model.eval(detail::kPositionFn, args);
    }
    w.shape_table.emplace(key, out);
    w.position_table.emplace(std::move(key), std::move(positions));
  }
  return w;
}

bool validate_witness(std::string_view model_text, const ConstraintSet& cs, std::string* why) {
  try {
    return check_witness(witness_from_model(Model::parse(model_text), cs), cs, why);
  } catch (const Error& e) {
    if (why) *why = e.what();
    return false;
  }
}

Verdict interpret(const RawResult& r, const ConstraintSet& cs) {
  switch (r.status) {
    case RawResult::Status::Unsat:
      return Unrealizable{"the morphism constraints are unsatisfiable"};
    case RawResult::Status::Sat: {
      std::string why;
      try {
        WitnessSummary w = witness_from_model(Model::parse(r.model), cs);
        if (check_witness(w, cs, &why)) return Realizable{std::move(w)};
      } catch (const Error& e) {
        why = e.what();
      }
      return Unknown{UnknownReason::WitnessValidationFailed, why};
    }
    case RawResult::Status::Timeout:
      return Unknown{UnknownReason::Timeout, "no answer within the time limit"};
    case RawResult::Status::Unknown:
      return Unknown{UnknownReason::SolverUnknown, "solver answered unknown"};
    case RawResult::Status::Error:
      break;
  }
  return Unknown{UnknownReason::SolverUnknown, "solver error: " + r.output};
}

std::string format_witness(const WitnessSummary& w, const ConstraintSet& cs) {
  std::ostringstream out;
  out << "shape morphism:\n";
  for (const auto& [in, s] : w.shape_table) out << "  " << shape_key_str(in) << " -> " << s.str() << "\n";
  out << "position morphism:\n";
  for (const auto& [in, ps] : w.position_table) {
    out << "  " << shape_key_str(in) << ":";
    for (std::size_t q = 0; q < ps.size(); ++q) out << " " << q << "<-" << ps[q];
    out << "\n";
  }
  if (!w.intermediates.empty()) {
    out << "intermediates:\n";
    for (const auto& [k, e] : w.intermediates)
      out << "  y" << k << " = " << from_extension(e).str(&cs.atoms) << "\n";
  }
  return out.str();
}

}  // namespace parachk
