#include "parachk/functor.hpp"

#include <cctype>
#include <sstream>
#include <tuple>

#include "parachk/error.hpp"

namespace parachk {

// ---------------------------------------------------------------------------
// Functor
// ---------------------------------------------------------------------------

struct Functor::Node {
  Kind kind;
  std::vector<Functor> children;
};

Functor::Functor() : Functor(id()) {}

Functor::Functor(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Functor Functor::id() {
  static const auto node = std::make_shared<const Node>(Node{Kind::Id, {}});
  return Functor(node);
}

Functor Functor::unit() {
  static const auto node = std::make_shared<const Node>(Node{Kind::Unit, {}});
  return Functor(node);
}

Functor Functor::integer() {
  static const auto node = std::make_shared<const Node>(Node{Kind::Int, {}});
  return Functor(node);
}

Functor Functor::boolean() {
  static const auto node = std::make_shared<const Node>(Node{Kind::Bool, {}});
  return Functor(node);
}

Functor Functor::list(Functor inner) {
  return Functor(std::make_shared<const Node>(Node{Kind::List, {std::move(inner)}}));
}

Functor Functor::prod(Functor left, Functor right) {
  return Functor(std::make_shared<const Node>(
      Node{Kind::Prod, {std::move(left), std::move(right)}}));
}

Functor Functor::maybe(Functor inner) {
  return Functor(std::make_shared<const Node>(Node{Kind::Maybe, {std::move(inner)}}));
}

Functor::Kind Functor::kind() const { return node_->kind; }

const Functor& Functor::inner() const { return node_->children.at(0); }
const Functor& Functor::left() const { return node_->children.at(0); }
const Functor& Functor::right() const { return node_->children.at(1); }

std::string Functor::str() const {
  switch (kind()) {
    case Kind::Id: return "Id";
    case Kind::Unit: return "Unit";
    case Kind::Int: return "Int";
    case Kind::Bool: return "Bool";
    case Kind::List: return "List(" + inner().str() + ")";
    case Kind::Prod: return "Prod(" + left().str() + "," + right().str() + ")";
    case Kind::Maybe: return "Maybe(" + inner().str() + ")";
  }
  return "?";
}

bool operator==(const Functor& a, const Functor& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.node_->children == b.node_->children;
}

namespace {

class FunctorParser {
 public:
  explicit FunctorParser(std::string_view text) : text_(text) {}

  Functor parse_all() {
    Functor f = parse();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return f;
  }

 private:
  Functor parse() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view word = text_.substr(start, pos_ - start);
    if (word == "Id") return Functor::id();
    if (word == "Unit") return Functor::unit();
    if (word == "Int") return Functor::integer();
    if (word == "Bool") return Functor::boolean();
    if (word == "List" || word == "Maybe") {
      expect('(');
      Functor inner = parse();
      expect(')');
      return word == "List" ? Functor::list(inner) : Functor::maybe(inner);
    }
    if (word == "Prod") {
      expect('(');
      Functor l = parse();
      expect(',');
      Functor r = parse();
      expect(')');
      return Functor::prod(l, r);
    }
    pos_ = start;
    fail(word.empty() ? "expected a functor" : "unknown functor '" + std::string(word) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("functor '" + std::string(text_) + "' at column " + std::to_string(pos_),
                     what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Functor Functor::parse(std::string_view text) { return FunctorParser(text).parse_all(); }

// ---------------------------------------------------------------------------
// AtomTable
// ---------------------------------------------------------------------------

Atom AtomTable::intern(const std::string& label) {
  auto [it, inserted] = codes_.try_emplace(label, static_cast<std::int64_t>(labels_.size()));
  if (inserted) labels_.push_back(label);
  return Atom{it->second};
}

std::optional<Atom> AtomTable::find(const std::string& label) const {
  auto it = codes_.find(label);
  if (it == codes_.end()) return std::nullopt;
  return Atom{it->second};
}

std::string AtomTable::label(Atom atom) const {
  if (atom.code >= 0 && atom.code < static_cast<std::int64_t>(labels_.size()))
    return labels_[static_cast<std::size_t>(atom.code)];
  return "?" + std::to_string(atom.code);
}

// ---------------------------------------------------------------------------
// Value
// ---------------------------------------------------------------------------

Value::Value() : Value(Kind::Unit, 0, {}) {}

Value::Value(Kind kind, std::int64_t number, std::vector<Value> items)
    : kind_(kind), number_(number), items_(std::move(items)) {}

Value Value::atom(Atom a) { return Value(Kind::Atom, a.code, {}); }
Value Value::integer(std::int64_t n) { return Value(Kind::Int, n, {}); }
Value Value::boolean(bool b) { return Value(Kind::Bool, b ? 1 : 0, {}); }
Value Value::unit() { return Value(Kind::Unit, 0, {}); }
Value Value::list(std::vector<Value> items) { return Value(Kind::List, 0, std::move(items)); }
Value Value::pair(Value first, Value second) {
  std::vector<Value> items;
  items.push_back(std::move(first));
  items.push_back(std::move(second));
  return Value(Kind::Pair, 0, std::move(items));
}
Value Value::nothing() { return Value(Kind::Nothing, 0, {}); }
Value Value::just(Value payload) {
  std::vector<Value> items;
  items.push_back(std::move(payload));
  return Value(Kind::Just, 0, std::move(items));
}

std::string Value::str(const AtomTable* atoms) const {
  switch (kind_) {
    case Kind::Atom: return atoms ? atoms->label(as_atom()) : "#" + std::to_string(number_);
    case Kind::Int: return std::to_string(number_);
    case Kind::Bool: return number_ ? "true" : "false";
    case Kind::Unit: return "()";
    case Kind::Nothing: return "Nothing";
    case Kind::Just: return "Just " + payload().str(atoms);
    case Kind::Pair: return "(" + first().str(atoms) + "," + second().str(atoms) + ")";
    case Kind::List: {
      std::string out = "[";
      for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i) out += ",";
        out += items_[i].str(atoms);
      }
      return out + "]";
    }
  }
  return "?";
}

bool operator==(const Value& a, const Value& b) {
  return a.kind_ == b.kind_ && a.number_ == b.number_ && a.items_ == b.items_;
}

bool operator<(const Value& a, const Value& b) {
  return std::tie(a.kind_, a.number_, a.items_) < std::tie(b.kind_, b.number_, b.items_);
}

// ---------------------------------------------------------------------------
// Shape
// ---------------------------------------------------------------------------

Shape::Shape() : Shape(Kind::Id, 0, {}) {}

Shape::Shape(Kind kind, std::int64_t number, std::vector<Shape> children)
    : kind_(kind), number_(number), children_(std::move(children)) {}

Shape Shape::id() { return Shape(Kind::Id, 0, {}); }
Shape Shape::unit() { return Shape(Kind::Unit, 0, {}); }
Shape Shape::integer(std::int64_t n) { return Shape(Kind::Int, n, {}); }
Shape Shape::boolean(bool b) { return Shape(Kind::Bool, b ? 1 : 0, {}); }
Shape Shape::list(std::vector<Shape> children) {
  auto n = static_cast<std::int64_t>(children.size());
  return Shape(Kind::List, n, std::move(children));
}
Shape Shape::list(std::size_t length, const Shape& child) {
  return list(std::vector<Shape>(length, child));
}
Shape Shape::prod(Shape left, Shape right) {
  std::vector<Shape> children;
  children.push_back(std::move(left));
  children.push_back(std::move(right));
  return Shape(Kind::Prod, 0, std::move(children));
}
Shape Shape::nothing() { return Shape(Kind::Maybe, 0, {}); }
Shape Shape::just(Shape child) {
  std::vector<Shape> children;
  children.push_back(std::move(child));
  return Shape(Kind::Maybe, 1, std::move(children));
}

std::string Shape::str() const {
  switch (kind_) {
    case Kind::Id: return "*";
    case Kind::Unit: return "()";
    case Kind::Int: return std::to_string(number_);
    case Kind::Bool: return number_ ? "true" : "false";
    case Kind::Prod: return "(" + left().str() + "," + right().str() + ")";
    case Kind::Maybe: return present() ? "Just " + child().str() : "Nothing";
    case Kind::List: {
      bool uniform_id = true;
      for (const auto& c : children_) uniform_id = uniform_id && c.kind() == Kind::Id;
      if (uniform_id) return std::to_string(children_.size());
      std::string out = "[";
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) out += ",";
        out += children_[i].str();
      }
      return out + "]";
    }
  }
  return "?";
}

bool operator==(const Shape& a, const Shape& b) {
  return a.kind_ == b.kind_ && a.number_ == b.number_ && a.children_ == b.children_;
}

bool operator<(const Shape& a, const Shape& b) {
  return std::tie(a.kind_, a.number_, a.children_) < std::tie(b.kind_, b.number_, b.children_);
}

// ---------------------------------------------------------------------------
// Container translation
// ---------------------------------------------------------------------------

bool typecheck(const Functor& f, const Value& v) {
  using FK = Functor::Kind;
  using VK = Value::Kind;
  switch (f.kind()) {
    case FK::Id: return v.kind() == VK::Atom;
    case FK::Unit: return v.kind() == VK::Unit;
    case FK::Int: return v.kind() == VK::Int;
    case FK::Bool: return v.kind() == VK::Bool;
    case FK::List:
      if (v.kind() != VK::List) return false;
      for (const auto& item : v.items())
        if (!typecheck(f.inner(), item)) return false;
      return true;
    case FK::Prod:
      return v.kind() == VK::Pair && typecheck(f.left(), v.first()) &&
             typecheck(f.right(), v.second());
    case FK::Maybe:
      return v.kind() == VK::Nothing || (v.kind() == VK::Just && typecheck(f.inner(), v.payload()));
  }
  return false;
}

namespace {

[[noreturn]] void type_mismatch(const Functor& f, const Value& v) {
  throw TypeError("value " + v.str() + " does not inhabit " + f.str());
}

void collect_elements(const Functor& f, const Value& v, std::vector<Atom>& out) {
  switch (f.kind()) {
    case Functor::Kind::Id: out.push_back(v.as_atom()); return;
    case Functor::Kind::List:
      for (const auto& item : v.items()) collect_elements(f.inner(), item, out);
      return;
    case Functor::Kind::Prod:
      collect_elements(f.left(), v.first(), out);
      collect_elements(f.right(), v.second(), out);
      return;
    case Functor::Kind::Maybe:
      if (v.kind() == Value::Kind::Just) collect_elements(f.inner(), v.payload(), out);
      return;
    default: return;
  }
}

Value rebuild(const Functor& f, const Shape& s, const std::vector<Atom>& elements,
              std::size_t& next) {
  switch (f.kind()) {
    case Functor::Kind::Id: return Value::atom(elements.at(next++));
    case Functor::Kind::Unit: return Value::unit();
    case Functor::Kind::Int: return Value::integer(s.number());
    case Functor::Kind::Bool: return Value::boolean(s.number() != 0);
    case Functor::Kind::List: {
      std::vector<Value> items;
      items.reserve(s.length());
      for (const auto& child : s.children()) items.push_back(rebuild(f.inner(), child, elements, next));
      return Value::list(std::move(items));
    }
    case Functor::Kind::Prod: {
      Value l = rebuild(f.left(), s.left(), elements, next);
      Value r = rebuild(f.right(), s.right(), elements, next);
      return Value::pair(std::move(l), std::move(r));
    }
    case Functor::Kind::Maybe:
      if (!s.present()) return Value::nothing();
      return Value::just(rebuild(f.inner(), s.child(), elements, next));
  }
  return Value::unit();
}

}  // namespace

Shape shape_of(const Functor& f, const Value& v) {
  if (!typecheck(f, v)) type_mismatch(f, v);
  switch (f.kind()) {
    case Functor::Kind::Id: return Shape::id();
    case Functor::Kind::Unit: return Shape::unit();
    case Functor::Kind::Int: return Shape::integer(v.as_int());
    case Functor::Kind::Bool: return Shape::boolean(v.as_bool());
    case Functor::Kind::List: {
      std::vector<Shape> children;
      children.reserve(v.items().size());
      for (const auto& item : v.items()) children.push_back(shape_of(f.inner(), item));
      return Shape::list(std::move(children));
    }
    case Functor::Kind::Prod:
      return Shape::prod(shape_of(f.left(), v.first()), shape_of(f.right(), v.second()));
    case Functor::Kind::Maybe:
      if (v.kind() == Value::Kind::Nothing) return Shape::nothing();
      return Shape::just(shape_of(f.inner(), v.payload()));
  }
  type_mismatch(f, v);
}

bool is_shape_of(const Functor& f, const Shape& s) {
  using FK = Functor::Kind;
  using SK = Shape::Kind;
  switch (f.kind()) {
    case FK::Id: return s.kind() == SK::Id;
    case FK::Unit: return s.kind() == SK::Unit;
    case FK::Int: return s.kind() == SK::Int;
    case FK::Bool: return s.kind() == SK::Bool && (s.number() == 0 || s.number() == 1);
    case FK::List:
      if (s.kind() != SK::List) return false;
      for (const auto& c : s.children())
        if (!is_shape_of(f.inner(), c)) return false;
      return true;
    case FK::Prod:
      return s.kind() == SK::Prod && is_shape_of(f.left(), s.left()) &&
             is_shape_of(f.right(), s.right());
    case FK::Maybe:
      if (s.kind() != SK::Maybe) return false;
      if (!s.present()) return s.children().empty() && s.number() == 0;
      return s.children().size() == 1 && is_shape_of(f.inner(), s.child());
  }
  return false;
}

std::size_t size_of(const Functor& f, const Shape& s) {
  if (!is_shape_of(f, s)) throw TypeError("shape " + s.str() + " is not a shape of " + f.str());
  switch (f.kind()) {
    case Functor::Kind::Id: return 1;
    case Functor::Kind::List: {
      std::size_t total = 0;
      for (const auto& c : s.children()) total += size_of(f.inner(), c);
      return total;
    }
    case Functor::Kind::Prod: return size_of(f.left(), s.left()) + size_of(f.right(), s.right());
    case Functor::Kind::Maybe: return s.present() ? size_of(f.inner(), s.child()) : 0;
    default: return 0;
  }
}

Extension to_extension(const Functor& f, const Value& v) {
  Extension e{f, shape_of(f, v), {}};
  collect_elements(f, v, e.elements);
  return e;
}

Value from_extension(const Extension& e) {
  std::size_t expected = size_of(e.functor, e.shape);
  if (expected != e.elements.size())
    throw TypeError("extension of " + e.functor.str() + " with shape " + e.shape.str() + " needs " +
                    std::to_string(expected) + " elements, got " +
                    std::to_string(e.elements.size()));
  std::size_t next = 0;
  return rebuild(e.functor, e.shape, e.elements, next);
}

}  // namespace parachk
