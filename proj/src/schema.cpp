#include "parachk/schema.hpp"

#include "parachk/error.hpp"

namespace parachk {

struct SlotExpr::Node {
  Op op;
  std::int64_t value = 0;  // constant, slot index, or scale factor
  std::vector<SlotExpr> args;
};

SlotExpr::SlotExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

SlotExpr SlotExpr::constant(std::int64_t value) {
  return SlotExpr(std::make_shared<const Node>(Node{Op::Const, value, {}}));
}

SlotExpr SlotExpr::truth() {
  static const auto node = std::make_shared<const Node>(Node{Op::True, 1, {}});
  return SlotExpr(node);
}

SlotExpr SlotExpr::slot(std::size_t index) {
  return SlotExpr(std::make_shared<const Node>(Node{Op::Slot, static_cast<std::int64_t>(index), {}}));
}

SlotExpr SlotExpr::add(SlotExpr a, SlotExpr b) {
  if (a.op() == Op::Const && a.node_->value == 0) return b;
  if (b.op() == Op::Const && b.node_->value == 0) return a;
  if (a.op() == Op::Const && b.op() == Op::Const) return constant(a.node_->value + b.node_->value);
  return SlotExpr(std::make_shared<const Node>(Node{Op::Add, 0, {std::move(a), std::move(b)}}));
}

SlotExpr SlotExpr::scale(std::int64_t factor, SlotExpr a) {
  if (factor == 1) return a;
  if (factor == 0) return constant(0);
  if (a.op() == Op::Const) return constant(factor * a.node_->value);
  return SlotExpr(std::make_shared<const Node>(Node{Op::Mul, factor, {std::move(a)}}));
}

SlotExpr SlotExpr::ite(SlotExpr cond, SlotExpr then_branch, SlotExpr else_branch) {
  return SlotExpr(std::make_shared<const Node>(
      Node{Op::Ite, 0, {std::move(cond), std::move(then_branch), std::move(else_branch)}}));
}

SlotExpr SlotExpr::eq(SlotExpr a, SlotExpr b) {
  return SlotExpr(std::make_shared<const Node>(Node{Op::Eq, 0, {std::move(a), std::move(b)}}));
}

SlotExpr SlotExpr::le(SlotExpr a, SlotExpr b) {
  return SlotExpr(std::make_shared<const Node>(Node{Op::Le, 0, {std::move(a), std::move(b)}}));
}

SlotExpr SlotExpr::lt(SlotExpr a, SlotExpr b) {
  return SlotExpr(std::make_shared<const Node>(Node{Op::Lt, 0, {std::move(a), std::move(b)}}));
}

SlotExpr SlotExpr::conj(std::vector<SlotExpr> parts) {
  std::vector<SlotExpr> kept;
  for (auto& p : parts) {
    if (p.op() == Op::True) continue;
    if (p.op() == Op::And) {
      kept.insert(kept.end(), p.node_->args.begin(), p.node_->args.end());
      continue;
    }
    kept.push_back(std::move(p));
  }
  if (kept.empty()) return truth();
  if (kept.size() == 1) return kept.front();
  return SlotExpr(std::make_shared<const Node>(Node{Op::And, 0, std::move(kept)}));
}

SlotExpr SlotExpr::implies(SlotExpr a, SlotExpr b) {
  if (b.op() == Op::True) return truth();
  return SlotExpr(std::make_shared<const Node>(Node{Op::Implies, 0, {std::move(a), std::move(b)}}));
}

SlotExpr::Op SlotExpr::op() const { return node_->op; }

SlotExpr SlotExpr::shifted(std::size_t offset) const {
  if (offset == 0) return *this;
  if (op() == Op::Slot) return slot(static_cast<std::size_t>(node_->value) + offset);
  if (node_->args.empty()) return *this;
  std::vector<SlotExpr> args;
  args.reserve(node_->args.size());
  for (const auto& a : node_->args) args.push_back(a.shifted(offset));
  return SlotExpr(std::make_shared<const Node>(Node{op(), node_->value, std::move(args)}));
}

std::int64_t SlotExpr::evaluate(std::span<const std::int64_t> slots) const {
  const auto& args = node_->args;
  switch (op()) {
    case Op::True: return 1;
    case Op::Const: return node_->value;
    case Op::Slot: return slots[static_cast<std::size_t>(node_->value)];
    case Op::Add: return args[0].evaluate(slots) + args[1].evaluate(slots);
    case Op::Mul: return node_->value * args[0].evaluate(slots);
    case Op::Ite: return args[0].evaluate(slots) ? args[1].evaluate(slots) : args[2].evaluate(slots);
    case Op::Eq: return args[0].evaluate(slots) == args[1].evaluate(slots);
    case Op::Le: return args[0].evaluate(slots) <= args[1].evaluate(slots);
    case Op::Lt: return args[0].evaluate(slots) < args[1].evaluate(slots);
    case Op::And:
      for (const auto& a : args)
        if (!a.evaluate(slots)) return 0;
      return 1;
    case Op::Implies: return !args[0].evaluate(slots) || args[1].evaluate(slots);
  }
  return 0;
}

namespace {

std::string smt_int(std::int64_t v) {
  return v < 0 ? "(- " + std::to_string(-v) + ")" : std::to_string(v);
}

}  // namespace

std::string SlotExpr::to_smt(std::span<const std::string> names) const {
  const auto& args = node_->args;
  auto bin = [&](const char* head) {
    return std::string("(") + head + " " + args[0].to_smt(names) + " " + args[1].to_smt(names) + ")";
  };
  switch (op()) {
    case Op::True: return "true";
    case Op::Const: return smt_int(node_->value);
    case Op::Slot: return names[static_cast<std::size_t>(node_->value)];
    case Op::Add: return bin("+");
    case Op::Mul: return "(* " + smt_int(node_->value) + " " + args[0].to_smt(names) + ")";
    case Op::Ite:
      return "(ite " + args[0].to_smt(names) + " " + args[1].to_smt(names) + " " +
             args[2].to_smt(names) + ")";
    case Op::Eq: return bin("=");
    case Op::Le: return bin("<=");
    case Op::Lt: return bin("<");
    case Op::Implies: return bin("=>");
    case Op::And: {
      std::string out = "(and";
      for (const auto& a : args) out += " " + a.to_smt(names);
      return out + ")";
    }
  }
  return "";
}

namespace {

SlotExpr in_01(std::size_t index) {
  return SlotExpr::conj({SlotExpr::le(SlotExpr::constant(0), SlotExpr::slot(index)),
                         SlotExpr::le(SlotExpr::slot(index), SlotExpr::constant(1))});
}

void flatten_into(const Functor& f, const std::string& path, ShapeSchema& out, SlotExpr& count) {
  auto name = [&](const char* leaf) { return path.empty() ? std::string(leaf) : path + "." + leaf; };
  switch (f.kind()) {
    case Functor::Kind::Id: count = SlotExpr::constant(1); return;
    case Functor::Kind::Unit: count = SlotExpr::constant(0); return;
    case Functor::Kind::Int:
      out.slots.push_back({SlotInfo::Kind::Int, name("int")});
      count = SlotExpr::constant(0);
      return;
    case Functor::Kind::Bool: {
      std::size_t index = out.slots.size();
      out.slots.push_back({SlotInfo::Kind::Bool, name("bool")});
      out.refinement = SlotExpr::conj({out.refinement, in_01(index)});
      count = SlotExpr::constant(0);
      return;
    }
    case Functor::Kind::List: {
      ShapeSchema element;
      SlotExpr element_count = SlotExpr::constant(0);
      flatten_into(f.inner(), "", element, element_count);
      if (!element.slots.empty())
        throw UnsupportedFunctor("functor " + f.str() + " has no fixed-arity shape: element functor " +
                                 f.inner().str() + " carries its own shape");
      std::size_t index = out.slots.size();
      out.slots.push_back({SlotInfo::Kind::Length, name("len")});
      out.refinement =
          SlotExpr::conj({out.refinement, SlotExpr::le(SlotExpr::constant(0), SlotExpr::slot(index))});
      count = SlotExpr::scale(element_count.evaluate({}), SlotExpr::slot(index));
      return;
    }
    case Functor::Kind::Prod: {
      SlotExpr left = SlotExpr::constant(0);
      SlotExpr right = SlotExpr::constant(0);
      flatten_into(f.left(), name("fst"), out, left);
      flatten_into(f.right(), name("snd"), out, right);
      count = SlotExpr::add(left, right);
      return;
    }
    case Functor::Kind::Maybe: {
      std::size_t presence = out.slots.size();
      out.slots.push_back({SlotInfo::Kind::Presence, name("just")});
      ShapeSchema child;
      SlotExpr child_count = SlotExpr::constant(0);
      flatten_into(f.inner(), "", child, child_count);
      std::size_t first = out.slots.size();
      for (auto info : child.slots) {
        info.name = name("just") + "." + info.name;
        out.slots.push_back(std::move(info));
      }
      SlotExpr present = SlotExpr::eq(SlotExpr::slot(presence), SlotExpr::constant(1));
      std::vector<SlotExpr> absent_zero;
      for (std::size_t i = 0; i < child.slots.size(); ++i)
        absent_zero.push_back(SlotExpr::eq(SlotExpr::slot(first + i), SlotExpr::constant(0)));
      std::vector<SlotExpr> parts{out.refinement, in_01(presence)};
      if (child.refinement.op() != SlotExpr::Op::True)
        parts.push_back(SlotExpr::implies(present, child.refinement.shifted(first)));
      if (!absent_zero.empty())
        parts.push_back(SlotExpr::implies(SlotExpr::eq(SlotExpr::slot(presence), SlotExpr::constant(0)),
                                          SlotExpr::conj(std::move(absent_zero))));
      out.refinement = SlotExpr::conj(std::move(parts));
      SlotExpr shifted_count = child_count.shifted(first);
      if (shifted_count.op() == SlotExpr::Op::Const && shifted_count.evaluate({}) == 1)
        count = SlotExpr::slot(presence);
      else if (shifted_count.op() == SlotExpr::Op::Const && shifted_count.evaluate({}) == 0)
        count = SlotExpr::constant(0);
      else
        count = SlotExpr::ite(present, shifted_count, SlotExpr::constant(0));
      return;
    }
  }
}

void flatten_value_into(const Functor& f, const Shape& s, std::vector<std::int64_t>& out) {
  switch (f.kind()) {
    case Functor::Kind::Int:
    case Functor::Kind::Bool: out.push_back(s.number()); return;
    case Functor::Kind::List: out.push_back(static_cast<std::int64_t>(s.length())); return;
    case Functor::Kind::Prod:
      flatten_value_into(f.left(), s.left(), out);
      flatten_value_into(f.right(), s.right(), out);
      return;
    case Functor::Kind::Maybe:
      out.push_back(s.present() ? 1 : 0);
      if (s.present()) {
        flatten_value_into(f.inner(), s.child(), out);
      } else {
        out.resize(out.size() + flatten_shape(f.inner()).slots.size(), 0);
      }
      return;
    default: return;
  }
}

Shape unflatten_from(const Functor& f, std::span<const std::int64_t> slots, std::size_t& next) {
  auto take = [&]() {
    if (next >= slots.size()) throw TypeError("too few shape slots for " + f.str());
    return slots[next++];
  };
  switch (f.kind()) {
    case Functor::Kind::Id: return Shape::id();
    case Functor::Kind::Unit: return Shape::unit();
    case Functor::Kind::Int: return Shape::integer(take());
    case Functor::Kind::Bool: {
      auto b = take();
      if (b != 0 && b != 1) throw TypeError("boolean slot out of range");
      return Shape::boolean(b != 0);
    }
    case Functor::Kind::List: {
      auto n = take();
      if (n < 0) throw TypeError("negative list length");
      std::size_t none = 0;
      return Shape::list(static_cast<std::size_t>(n), unflatten_from(f.inner(), {}, none));
    }
    case Functor::Kind::Prod: {
      Shape l = unflatten_from(f.left(), slots, next);
      Shape r = unflatten_from(f.right(), slots, next);
      return Shape::prod(std::move(l), std::move(r));
    }
    case Functor::Kind::Maybe: {
      auto present = take();
      if (present == 1) return Shape::just(unflatten_from(f.inner(), slots, next));
      if (present != 0) throw TypeError("presence slot out of range");
      std::size_t width = flatten_shape(f.inner()).slots.size();
      for (std::size_t i = 0; i < width; ++i)
        if (take() != 0) throw TypeError("absent Maybe child has nonzero slots");
      return Shape::nothing();
    }
  }
  return Shape::unit();
}

}  // namespace

ShapeSchema flatten_shape(const Functor& f) {
  ShapeSchema schema;
  SlotExpr count = SlotExpr::constant(0);
  flatten_into(f, "", schema, count);
  schema.count = count;
  return schema;
}

bool has_fixed_arity(const Functor& f) {
  try {
    flatten_shape(f);
    return true;
  } catch (const UnsupportedFunctor&) {
    return false;
  }
}

std::vector<std::int64_t> flatten_value(const Functor& f, const Shape& s) {
  if (!is_shape_of(f, s)) throw TypeError("shape " + s.str() + " is not a shape of " + f.str());
  std::vector<std::int64_t> out;
  flatten_value_into(f, s, out);
  return out;
}

Shape unflatten_shape(const Functor& f, std::span<const std::int64_t> slots) {
  std::size_t next = 0;
  Shape s = unflatten_from(f, slots, next);
  if (next != slots.size()) throw TypeError("too many shape slots for " + f.str());
  return s;
}

}  // namespace parachk
