#pragma once

// Strictly positive unary functors, the monomorphic values that inhabit
// them, and the translation between values and small-container extensions.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace parachk {

/// Grammar of unary functors: Id | Unit | Int | Bool | List f | Prod f g |
/// Maybe f. Immutable; copies share structure.
class Functor {
 public:
  enum class Kind { Id, Unit, Int, Bool, List, Prod, Maybe };

  Functor();  // Id

  static Functor id();
  static Functor unit();
  static Functor integer();
  static Functor boolean();
  static Functor list(Functor inner);
  static Functor prod(Functor left, Functor right);
  static Functor maybe(Functor inner);

  /// Parses the textual form `Id | Unit | Int | Bool | List(f) | Prod(f,g) |
  /// Maybe(f)`. Throws ParseError.
  static Functor parse(std::string_view text);

  Kind kind() const;
  const Functor& inner() const;
  const Functor& left() const;
  const Functor& right() const;

  std::string str() const;

  friend bool operator==(const Functor& a, const Functor& b);

 private:
  struct Node;
  explicit Functor(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// Opaque element of the type parameter. Only identity is observable.
struct Atom {
  std::int64_t code = 0;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

/// Dense bijection between atom labels and codes 0..k-1, in order of
/// first interning.
class AtomTable {
 public:
  Atom intern(const std::string& label);
  std::optional<Atom> find(const std::string& label) const;
  /// Label of a code; codes outside the table render as `?<code>`.
  std::string label(Atom atom) const;
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, std::int64_t> codes_;
};

class Value {
 public:
  enum class Kind { Atom, Int, Bool, Unit, List, Pair, Nothing, Just };

  Value();  // unit

  static Value atom(Atom a);
  static Value integer(std::int64_t n);
  static Value boolean(bool b);
  static Value unit();
  static Value list(std::vector<Value> items);
  static Value pair(Value first, Value second);
  static Value nothing();
  static Value just(Value payload);

  Kind kind() const { return kind_; }
  Atom as_atom() const { return Atom{number_}; }
  std::int64_t as_int() const { return number_; }
  bool as_bool() const { return number_ != 0; }
  const std::vector<Value>& items() const { return items_; }
  const Value& first() const { return items_.at(0); }
  const Value& second() const { return items_.at(1); }
  const Value& payload() const { return items_.at(0); }

  /// Human-readable rendering, e.g. `[A,B]`, `(1,Just C)`.
  std::string str(const AtomTable* atoms = nullptr) const;

  friend bool operator==(const Value& a, const Value& b);
  friend bool operator<(const Value& a, const Value& b);

 private:
  Value(Kind kind, std::int64_t number, std::vector<Value> items);

  Kind kind_;
  std::int64_t number_;
  std::vector<Value> items_;
};

/// Shape component of a container value: the value with atoms erased.
/// Monomorphic payloads (Int, Bool) are part of the shape.
class Shape {
 public:
  enum class Kind { Id, Unit, Int, Bool, List, Prod, Maybe };

  Shape();  // Id

  static Shape id();
  static Shape unit();
  static Shape integer(std::int64_t n);
  static Shape boolean(bool b);
  static Shape list(std::vector<Shape> children);
  /// List of `length` copies of `child`.
  static Shape list(std::size_t length, const Shape& child);
  static Shape prod(Shape left, Shape right);
  static Shape nothing();
  static Shape just(Shape child);

  Kind kind() const { return kind_; }
  std::int64_t number() const { return number_; }
  std::size_t length() const { return children_.size(); }
  bool present() const { return kind_ == Kind::Maybe && number_ != 0; }
  const std::vector<Shape>& children() const { return children_; }
  const Shape& left() const { return children_.at(0); }
  const Shape& right() const { return children_.at(1); }
  const Shape& child() const { return children_.at(0); }

  std::string str() const;

  friend bool operator==(const Shape& a, const Shape& b);
  friend bool operator<(const Shape& a, const Shape& b);

 private:
  Shape(Kind kind, std::int64_t number, std::vector<Shape> children);

  Kind kind_;
  std::int64_t number_;
  std::vector<Shape> children_;
};

/// A value as (shape, elements) with elements indexed by canonical
/// position: depth-first, left-to-right, products numbered left block
/// then right block.
struct Extension {
  Functor functor;
  Shape shape;
  std::vector<Atom> elements;

  friend bool operator==(const Extension& a, const Extension& b) {
    return a.functor == b.functor && a.shape == b.shape &&
           a.elements == b.elements;
  }
};

bool typecheck(const Functor& f, const Value& v);
/// Throws TypeError when `v` does not inhabit `f`.
Shape shape_of(const Functor& f, const Value& v);
/// Number of element positions. Throws TypeError on a shape mismatch.
std::size_t size_of(const Functor& f, const Shape& s);
/// True iff `s` is a well-formed shape of `f`.
bool is_shape_of(const Functor& f, const Shape& s);
Extension to_extension(const Functor& f, const Value& v);
/// Throws TypeError when the element count disagrees with the shape.
Value from_extension(const Extension& e);

}  // namespace parachk
