#include "parachk/model.hpp"

#include <cctype>

#include "parachk/error.hpp"

namespace parachk {

std::string SExpr::str() const {
  if (is_atom()) return atom;
  std::string out = "(";
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) out += " ";
    out += list[i].str();
  }
  return out + ")";
}

namespace {

class SExprReader {
 public:
  explicit SExprReader(std::string_view text) : text_(text) {}

  std::vector<SExpr> read_all() {
    std::vector<SExpr> out;
    for (skip(); pos_ < text_.size(); skip()) out.push_back(read());
    return out;
  }

 private:
  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  SExpr read() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      SExpr node;
      for (skip(); pos_ < text_.size() && text_[pos_] != ')'; skip()) node.list.push_back(read());
      if (pos_ >= text_.size()) fail("unbalanced '('");
      ++pos_;
      return node;
    }
    if (c == ')') fail("unexpected ')'");
    std::size_t start = pos_;
    if (c == '|') {
      ++pos_;
      while (pos_ < text_.size() && text_[pos_] != '|') ++pos_;
      if (pos_ >= text_.size()) fail("unterminated quoted symbol");
      ++pos_;
      return SExpr{std::string(text_.substr(start + 1, pos_ - start - 2)), {}};
    }
    if (c == '"') {
      ++pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') ++pos_;
      if (pos_ >= text_.size()) fail("unterminated string");
      ++pos_;
      return SExpr{std::string(text_.substr(start, pos_ - start)), {}};
    }
    while (pos_ < text_.size()) {
      char d = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' || d == ';') break;
      ++pos_;
    }
    return SExpr{std::string(text_.substr(start, pos_ - start)), {}};
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("model byte " + std::to_string(pos_), what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool is_numeral(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  // SMT-LIB div: a = b*q + r with 0 <= r < |b|
  std::int64_t q = a / b;
  std::int64_t r = a % b;
  if (r < 0) q += b > 0 ? -1 : 1;
  return q;
}

}  // namespace

std::vector<SExpr> parse_sexprs(std::string_view text) { return SExprReader(text).read_all(); }

Model Model::parse(std::string_view text) {
  auto top = parse_sexprs(text);
  if (top.size() != 1 || top.front().is_atom()) throw ParseError("model", "expected one model s-expression");
  std::vector<SExpr> entries = top.front().list;
  if (!entries.empty() && entries.front().is_atom() && entries.front().atom == "model")
    entries.erase(entries.begin());
  Model model;
  for (const auto& entry : entries) {
    if (entry.is_atom() || entry.list.empty() || !entry.list[0].is_atom()) continue;
    const std::string& head = entry.list[0].atom;
    if (head != "define-fun") continue;  // declare-sort, forall comments, ...
    if (entry.list.size() != 5 || !entry.list[1].is_atom())
      throw ParseError("model", "malformed define-fun: " + entry.str());
    Function fn;
    for (const auto& param : entry.list[2].list) {
      if (param.is_atom() || param.list.size() != 2 || !param.list[0].is_atom())
        throw ParseError("model", "malformed parameter in " + entry.list[1].atom);
      fn.params.push_back(param.list[0].atom);
    }
    fn.body = entry.list[4];
    model.functions_[entry.list[1].atom] = std::move(fn);
  }
  return model;
}

std::int64_t Model::eval(const std::string& name, std::span<const std::int64_t> args) const {
  auto it = functions_.find(name);
  if (it == functions_.end()) return 0;
  const Function& fn = it->second;
  if (fn.params.size() != args.size())
    throw ParseError("model", name + " applied to " + std::to_string(args.size()) + " arguments, defined with " +
                                  std::to_string(fn.params.size()));
  Env env;
  for (std::size_t i = 0; i < args.size(); ++i) env.emplace_back(fn.params[i], args[i]);
  return eval_term(fn.body, env, 0);
}

std::int64_t Model::eval_term(const SExpr& term, Env& env, int depth) const {
  if (depth > 10000) throw ParseError("model", "term nesting too deep");
  if (term.is_atom()) {
    const std::string& a = term.atom;
    if (a == "true") return 1;
    if (a == "false") return 0;
    if (is_numeral(a)) return std::stoll(a);
    for (auto it = env.rbegin(); it != env.rend(); ++it)
      if (it->first == a) return it->second;
    if (functions_.count(a)) return eval(a, {});
    throw ParseError("model", "unbound symbol '" + a + "'");
  }
  if (term.list.empty() || !term.list[0].is_atom())
    throw ParseError("model", "cannot evaluate " + term.str());
  const std::string& op = term.list[0].atom;
  const auto& xs = term.list;
  auto arg = [&](std::size_t i) { return eval_term(xs.at(i), env, depth + 1); };
  const std::size_t n = xs.size() - 1;

  if (op == "ite") return arg(1) ? arg(2) : arg(3);
  if (op == "not") return !arg(1);
  if (op == "and") {
    for (std::size_t i = 1; i <= n; ++i)
      if (!arg(i)) return 0;
    return 1;
  }
  if (op == "or") {
    for (std::size_t i = 1; i <= n; ++i)
      if (arg(i)) return 1;
    return 0;
  }
  if (op == "=>") return !arg(1) || arg(2);
  if (op == "xor") return (arg(1) != 0) != (arg(2) != 0);
  if (op == "=") {
    auto first = arg(1);
    for (std::size_t i = 2; i <= n; ++i)
      if (arg(i) != first) return 0;
    return 1;
  }
  if (op == "distinct") {
    std::vector<std::int64_t> seen;
    for (std::size_t i = 1; i <= n; ++i) seen.push_back(arg(i));
    for (std::size_t i = 0; i < seen.size(); ++i)
      for (std::size_t j = i + 1; j < seen.size(); ++j)
        if (seen[i] == seen[j]) return 0;
    return 1;
  }
  auto chain = [&](auto cmp) -> std::int64_t {
    for (std::size_t i = 1; i < n; ++i)
      if (!cmp(arg(i), arg(i + 1))) return 0;
    return 1;
  };
  if (op == "<") return chain([](auto a, auto b) { return a < b; });
  if (op == "<=") return chain([](auto a, auto b) { return a <= b; });
  if (op == ">") return chain([](auto a, auto b) { return a > b; });
  if (op == ">=") return chain([](auto a, auto b) { return a >= b; });
  if (op == "+") {
    std::int64_t s = 0;
    for (std::size_t i = 1; i <= n; ++i) s += arg(i);
    return s;
  }
  if (op == "-") {
    if (n == 1) return -arg(1);
    std::int64_t s = arg(1);
    for (std::size_t i = 2; i <= n; ++i) s -= arg(i);
    return s;
  }
  if (op == "*") {
    std::int64_t s = 1;
    for (std::size_t i = 1; i <= n; ++i) s *= arg(i);
    return s;
  }
  if (op == "div" || op == "mod") {
    auto a = arg(1);
    auto b = arg(2);
    if (b == 0) return 0;  // unconstrained in SMT-LIB; any value is a model
    auto q = floor_div(a, b);
    return op == "div" ? q : a - b * q;
  }
  if (op == "abs") {
    auto a = arg(1);
    return a < 0 ? -a : a;
  }
  if (op == "let") {
    // parallel let: evaluate every binding in the outer scope first
    const std::size_t outer = env.size();
    std::vector<std::int64_t> values;
    for (const auto& binding : xs.at(1).list) values.push_back(eval_term(binding.list.at(1), env, depth + 1));
    for (std::size_t i = 0; i < values.size(); ++i) env.emplace_back(xs[1].list[i].list.at(0).atom, values[i]);
    std::int64_t result = eval_term(xs.at(2), env, depth + 1);
    env.resize(outer);
    return result;
  }
  if (auto it = functions_.find(op); it != functions_.end()) {
    std::vector<std::int64_t> values;
    for (std::size_t i = 1; i <= n; ++i) values.push_back(arg(i));
    return eval(op, values);
  }
  throw ParseError("model", "unsupported operator '" + op + "'");
}

}  // namespace parachk
