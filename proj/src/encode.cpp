#include "parachk/encode.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "layout.hpp"
#include "parachk/error.hpp"

namespace parachk {

namespace detail {

std::vector<std::int64_t> PartLayout::slots_of(const Shape& s) const {
  if (schema) return flatten_value(functor, s);
  return {codes.at(s)};
}

Layout make_layout(const ConstraintSet& cs) {
  Layout layout;
  layout.output = flatten_shape(cs.output_functor);

  std::vector<bool> hosts_intermediate(cs.input_parts.size(), false);
  for (const auto& c : cs.constraints)
    for (std::size_t i = 0; i < c.input.size(); ++i)
      if (std::holds_alternative<Intermediate>(c.input[i])) hosts_intermediate[i] = true;

  for (std::size_t i = 0; i < cs.input_parts.size(); ++i) {
    PartLayout part{cs.input_parts[i], std::nullopt, {}};
    if (has_fixed_arity(part.functor)) {
      part.schema = flatten_shape(part.functor);
    } else {
      if (hosts_intermediate[i]) flatten_shape(part.functor);  // throws with the reason
      for (const auto& c : cs.constraints) {
        const auto& e = std::get<Extension>(c.input[i]);
        part.codes.try_emplace(e.shape, static_cast<std::int64_t>(part.codes.size()));
      }
    }
    layout.input_width += part.width();
    layout.parts.push_back(std::move(part));
  }

  auto note_output = [&](const Extension& e) {
    layout.max_known_output =
        std::max(layout.max_known_output, static_cast<std::int64_t>(e.elements.size()));
  };
  for (const auto& c : cs.constraints) {
    if (const auto* e = std::get_if<Extension>(&c.output)) note_output(*e);
    for (std::size_t i = 0; i < c.input.size(); ++i)
      if (cs.input_parts[i] == cs.output_functor)
        if (const auto* e = std::get_if<Extension>(&c.input[i])) note_output(*e);
  }
  return layout;
}

}  // namespace detail

namespace {

using detail::Layout;

std::string lit(std::int64_t v) { return v < 0 ? "(- " + std::to_string(-v) + ")" : std::to_string(v); }

std::string call(const std::string& fn, const std::vector<std::string>& args) {
  if (args.empty()) return fn;
  std::string out = "(" + fn;
  for (const auto& a : args) out += " " + a;
  return out + ")";
}

/// Integer term accumulated as literal + symbolic summands.
struct SumTerm {
  std::int64_t constant = 0;
  std::vector<std::string> symbolic;

  void add(const std::string& term) { symbolic.push_back(term); }
  std::string str() const {
    if (symbolic.empty()) return lit(constant);
    std::vector<std::string> parts = symbolic;
    if (constant != 0) parts.push_back(lit(constant));
    if (parts.size() == 1) return parts.front();
    return call("+", parts);
  }
  bool is_literal() const { return symbolic.empty(); }
};

std::vector<std::string> intermediate_slot_names(int id, std::size_t width) {
  std::vector<std::string> names;
  for (std::size_t j = 0; j < width; ++j) names.push_back(detail::shape_slot_name(id, j));
  return names;
}

/// One input part of one constraint, as seen by the position constraint.
struct PartView {
  const Extension* known = nullptr;
  int intermediate = -1;
  SumTerm offset;
  std::string count;  // symbolic count for intermediates
};

class Encoder {
 public:
  Encoder(const ConstraintSet& cs, const EncodeOptions& options)
      : cs_(cs), options_(options), layout_(detail::make_layout(cs)) {}

  SmtScript run() {
    declare();
    for (int k = 0; k < cs_.intermediates; ++k) {
      auto names = intermediate_slot_names(k, layout_.output.slots.size());
      if (layout_.output.refinement.op() != SlotExpr::Op::True)
        assert_cmd(layout_.output.refinement.to_smt(names),
                   "shape refinement of intermediate " + std::to_string(k));
    }
    if (options_.intermediate_bound)
      for (int k = 0; k < cs_.intermediates; ++k) bound_intermediate(k, *options_.intermediate_bound);
    for (std::size_t i = 0; i < cs_.constraints.size(); ++i) encode_constraint(i);
    script_.logic = script_.quantifiers ? "UFLIA" : "QF_UFLIA";
    script_.get_model = options_.produce_model;
    if (options_.produce_model) script_.options.push_back("(set-option :produce-models true)");
    return std::move(script_);
  }

 private:
  void declare() {
    std::string int_args;
    for (std::size_t i = 0; i < layout_.input_width; ++i) int_args += i ? " Int" : "Int";
    for (std::size_t j = 0; j < layout_.output.slots.size(); ++j)
      script_.declarations.push_back("(declare-fun " + detail::shape_fn_name(j) + " (" + int_args +
                                     ") Int) ; output slot " + layout_.output.slots[j].name);
    script_.declarations.push_back(std::string("(declare-fun ") + detail::kPositionFn + " (" +
                                   int_args + (int_args.empty() ? "" : " ") + "Int) Int)");
    for (int k = 0; k < cs_.intermediates; ++k) {
      for (std::size_t j = 0; j < layout_.output.slots.size(); ++j)
        script_.declarations.push_back("(declare-fun " + detail::shape_slot_name(k, j) + " () Int)");
      script_.declarations.push_back("(declare-fun " + detail::element_fn_name(k) + " (Int) Int)");
    }
  }

  void assert_cmd(const std::string& formula, const std::string& comment) {
    script_.assertions.push_back("; " + comment + "\n(assert " + formula + ")");
  }

  void bound_intermediate(int k, std::int64_t bound) {
    auto names = intermediate_slot_names(k, layout_.output.slots.size());
    std::vector<std::string> caps{"(<= " + output_count(k) + " " + lit(bound) + ")"};
    for (std::size_t j = 0; j < names.size(); ++j)
      if (layout_.output.slots[j].kind == SlotInfo::Kind::Length)
        caps.push_back("(<= " + names[j] + " " + lit(bound) + ")");
    assert_cmd(caps.size() == 1 ? caps.front() : call("and", caps),
               "small-model bound on intermediate " + std::to_string(k));
  }

  std::string output_count(int intermediate) const {
    return layout_.output.count.to_smt(intermediate_slot_names(intermediate, layout_.output.slots.size()));
  }

  void encode_constraint(std::size_t index) {
    const MorphismConstraint& c = cs_.constraints[index];
    std::string label = "constraint " + std::to_string(index) + " (example " + std::to_string(c.example) +
                        ", step " + std::to_string(c.step) + ")";

    // input shape arguments, offsets and total count
    std::vector<std::string> args;
    std::vector<PartView> parts;
    SumTerm running;
    for (std::size_t i = 0; i < c.input.size(); ++i) {
      const auto& part = layout_.parts[i];
      PartView view;
      view.offset = running;
      if (const auto* e = std::get_if<Extension>(&c.input[i])) {
        view.known = e;
        for (auto v : part.slots_of(e->shape)) args.push_back(lit(v));
        running.constant += static_cast<std::int64_t>(e->elements.size());
      } else {
        int k = std::get<Intermediate>(c.input[i]).id;
        view.intermediate = k;
        for (std::size_t j = 0; j < part.width(); ++j) args.push_back(detail::shape_slot_name(k, j));
        view.count = output_count(k);
        running.add(view.count);
      }
      parts.push_back(std::move(view));
    }
    const std::string input_count = running.str();

    // shape equations, slot by slot
    std::vector<std::string> out_slots;
    const auto* known_out = std::get_if<Extension>(&c.output);
    int out_id = known_out ? -1 : std::get<Intermediate>(c.output).id;
    if (known_out) {
      for (auto v : flatten_value(cs_.output_functor, known_out->shape)) out_slots.push_back(lit(v));
    } else {
      out_slots = intermediate_slot_names(out_id, layout_.output.slots.size());
    }
    std::vector<std::string> equations;
    for (std::size_t j = 0; j < out_slots.size(); ++j)
      equations.push_back("(= " + call(detail::shape_fn_name(j), args) + " " + out_slots[j] + ")");
    if (!equations.empty())
      assert_cmd(equations.size() == 1 ? equations.front() : call("and", equations), label + ": shape");

    // position morphism and element consistency
    auto position_body = [&](const std::string& q, const std::string& target) {
      std::vector<std::string> pos_args = args;
      pos_args.push_back(q);
      std::vector<std::string> sources;
      for (const auto& view : parts) {
        if (view.known) {
          for (std::size_t r = 0; r < view.known->elements.size(); ++r) {
            SumTerm at = view.offset;
            at.constant += static_cast<std::int64_t>(r);
            sources.push_back("(and (= p " + at.str() + ") (= " + lit(view.known->elements[r].code) + " " +
                              target + "))");
          }
        } else {
          SumTerm end = view.offset;
          end.add(view.count);
          std::string local = view.offset.is_literal() && view.offset.constant == 0
                                  ? "p"
                                  : "(- p " + view.offset.str() + ")";
          sources.push_back("(and (<= " + view.offset.str() + " p) (< p " + end.str() + ") (= " +
                            call(detail::element_fn_name(view.intermediate), {local}) + " " + target +
                            "))");
        }
      }
      std::string choice = sources.empty() ? "false"
                           : sources.size() == 1 ? sources.front()
                                                 : call("or", sources);
      return "(let ((p " + call(detail::kPositionFn, pos_args) + ")) (and (<= 0 p) (< p " + input_count +
             ") " + choice + "))";
    };

    if (known_out) {
      std::vector<std::string> per_position;
      for (std::size_t q = 0; q < known_out->elements.size(); ++q)
        per_position.push_back(position_body(lit(static_cast<std::int64_t>(q)),
                                             lit(known_out->elements[q].code)));
      if (!per_position.empty())
        assert_cmd(per_position.size() == 1 ? per_position.front() : call("and", per_position),
                   label + ": positions");
      return;
    }

    const std::string count = output_count(out_id);
    const std::string element = detail::element_fn_name(out_id);
    assert_cmd("(forall ((q Int)) (=> (and (<= 0 q) (< q " + count + ")) " +
                   position_body("q", "(" + element + " q)") + "))",
               label + ": positions of intermediate " + std::to_string(out_id));
    ++script_.quantifiers;
    if (options_.instantiation_hints) {
      std::vector<std::string> hints;
      for (std::int64_t q = 0; q < layout_.max_known_output; ++q)
        hints.push_back("(=> (< " + lit(q) + " " + count + ") " +
                        position_body(lit(q), "(" + element + " " + lit(q) + ")") + ")");
      if (!hints.empty())
        assert_cmd(hints.size() == 1 ? hints.front() : call("and", hints),
                   label + ": ground instances below " + std::to_string(layout_.max_known_output));
    }
  }

  const ConstraintSet& cs_;
  EncodeOptions options_;
  Layout layout_;
  SmtScript script_;
};

}  // namespace

std::string SmtScript::text() const {
  std::ostringstream out;
  for (const auto& o : options) out << o << "\n";
  out << "(set-logic " << logic << ")\n";
  for (const auto& d : declarations) out << d << "\n";
  for (const auto& a : assertions) out << a << "\n";
  out << "(check-sat)\n";
  if (get_model) out << "(get-model)\n";
  return out.str();
}

std::int64_t small_model_bound(const ConstraintSet& cs) {
  const ShapeSchema schema = flatten_shape(cs.output_functor);
  std::int64_t bound = 0;
  auto note = [&](const Extension& e) {
    auto slots = flatten_value(cs.output_functor, e.shape);
    bound = std::max(bound, schema.count.evaluate(slots));
    for (std::size_t j = 0; j < slots.size(); ++j)
      if (schema.slots[j].kind == SlotInfo::Kind::Length) bound = std::max(bound, slots[j]);
  };
  for (const auto& c : cs.constraints) {
    if (const auto* e = std::get_if<Extension>(&c.output)) note(*e);
    if (cs.sketch == SketchKind::Foldr)
      if (const auto* e = std::get_if<Extension>(&c.input.back())) note(*e);
  }
  return bound;
}

SmtScript encode(const ConstraintSet& cs, const EncodeOptions& options) {
  return Encoder(cs, options).run();
}

}  // namespace parachk
