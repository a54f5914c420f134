#pragma once

// Reader and evaluator for the function definitions of an SMT-LIB2 model,
// as printed by (get-model).

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace parachk {

struct SExpr {
  std::string atom;  // non-empty iff this is an atom
  std::vector<SExpr> list;

  bool is_atom() const { return !atom.empty(); }
  std::string str() const;
};

/// Parses every top-level s-expression in `text`. Throws ParseError.
std::vector<SExpr> parse_sexprs(std::string_view text);

class Model {
 public:
  /// Accepts `(model (define-fun ...) ...)` and `((define-fun ...) ...)`.
  /// Throws ParseError on malformed input.
  static Model parse(std::string_view text);

  bool defines(const std::string& name) const { return functions_.count(name) != 0; }
  /// Evaluates `name` at integer arguments. Symbols the model leaves out
  /// are unconstrained and evaluate to 0. Throws ParseError on terms the
  /// evaluator does not understand.
  std::int64_t eval(const std::string& name, std::span<const std::int64_t> args) const;

 private:
  struct Function {
    std::vector<std::string> params;
    SExpr body;
  };
  using Env = std::vector<std::pair<std::string_view, std::int64_t>>;
  std::int64_t eval_term(const SExpr& term, Env& env, int depth) const;

  std::map<std::string, Function> functions_;
};

}  // namespace parachk
