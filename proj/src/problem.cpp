#include "parachk/problem.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "parachk/error.hpp"

namespace parachk {

using nlohmann::json;

std::string to_string(SketchKind kind) {
  switch (kind) {
    case SketchKind::Raw: return "raw";
    case SketchKind::Map: return "map";
    case SketchKind::Foldr: return "foldr";
  }
  return "?";
}

namespace {

void reject_unknown_fields(const json& obj, std::initializer_list<std::string_view> allowed,
                           const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw ParseError(where, "unknown field '" + key + "'");
  }
}

Value parse_value(const json& j, AtomTable& atoms, const std::string& where) {
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s == "unit") return Value::unit();
    if (s == "nothing") return Value::nothing();
    throw ParseError(where, "unknown value literal '" + s + "'");
  }
  if (!j.is_object() || j.size() != 1)
    throw ParseError(where, "a value is \"unit\", \"nothing\", or an object with exactly one tag");
  const auto& [tag, body] = *j.items().begin();
  if (tag == "atom") {
    if (!body.is_string() || body.get<std::string>().empty())
      throw ParseError(where, "atom label must be a non-empty string");
    return Value::atom(atoms.intern(body.get<std::string>()));
  }
  if (tag == "int") {
    if (!body.is_number_integer()) throw ParseError(where, "int payload must be an integer");
    return Value::integer(body.get<std::int64_t>());
  }
  if (tag == "bool") {
    if (!body.is_boolean()) throw ParseError(where, "bool payload must be a boolean");
    return Value::boolean(body.get<bool>());
  }
  if (tag == "list") {
    if (!body.is_array()) throw ParseError(where, "list payload must be an array");
    std::vector<Value> items;
    for (std::size_t i = 0; i < body.size(); ++i)
      items.push_back(parse_value(body[i], atoms, where + ".list[" + std::to_string(i) + "]"));
    return Value::list(std::move(items));
  }
  if (tag == "pair") {
    if (!body.is_array() || body.size() != 2) throw ParseError(where, "pair payload must be a 2-array");
    Value l = parse_value(body[0], atoms, where + ".pair[0]");
    Value r = parse_value(body[1], atoms, where + ".pair[1]");
    return Value::pair(std::move(l), std::move(r));
  }
  if (tag == "just") return Value::just(parse_value(body, atoms, where + ".just"));
  throw ParseError(where, "unknown value tag '" + tag + "'");
}

json value_to_json(const Value& v, const AtomTable& atoms) {
  switch (v.kind()) {
    case Value::Kind::Atom: return json{{"atom", atoms.label(v.as_atom())}};
    case Value::Kind::Int: return json{{"int", v.as_int()}};
    case Value::Kind::Bool: return json{{"bool", v.as_bool()}};
    case Value::Kind::Unit: return "unit";
    case Value::Kind::Nothing: return "nothing";
    case Value::Kind::Just: return json{{"just", value_to_json(v.payload(), atoms)}};
    case Value::Kind::Pair:
      return json{{"pair", json::array({value_to_json(v.first(), atoms), value_to_json(v.second(), atoms)})}};
    case Value::Kind::List: {
      json items = json::array();
      for (const auto& item : v.items()) items.push_back(value_to_json(item, atoms));
      return json{{"list", items}};
    }
  }
  return nullptr;
}

Functor parse_functor_field(const json& sig, const char* key, const std::string& where,
                            std::optional<Functor> fallback) {
  if (!sig.contains(key)) {
    if (fallback) return *fallback;
    throw ParseError(where, std::string("missing field '") + key + "'");
  }
  if (!sig[key].is_string()) throw ParseError(where + "." + key, "functor must be a string");
  return Functor::parse(sig[key].get<std::string>());
}

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw ParseError(where, std::string("missing field '") + key + "'");
  return obj[key];
}

}  // namespace

Problem parse_problem(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
  if (!doc.is_object()) throw ParseError("$", "problem must be a JSON object");
  reject_unknown_fields(doc, {"name", "signature", "sketch", "examples", "options"}, "$");

  Problem p;
  const auto& name = require(doc, "name", "$");
  if (!name.is_string()) throw ParseError("$.name", "must be a string");
  p.name = name.get<std::string>();

  const auto& sig = require(doc, "signature", "$");
  if (!sig.is_object()) throw ParseError("$.signature", "must be an object");
  reject_unknown_fields(sig, {"extra", "element", "result"}, "$.signature");
  p.signature.extra = parse_functor_field(sig, "extra", "$.signature", Functor::unit());
  p.signature.element = parse_functor_field(sig, "element", "$.signature", std::nullopt);
  p.signature.result = parse_functor_field(sig, "result", "$.signature", std::nullopt);

  const auto& sketch = require(doc, "sketch", "$");
  std::string sketch_name = sketch.is_string() ? sketch.get<std::string>() : "";
  if (sketch_name == "raw")
    p.sketch = SketchKind::Raw;
  else if (sketch_name == "map")
    p.sketch = SketchKind::Map;
  else if (sketch_name == "foldr")
    p.sketch = SketchKind::Foldr;
  else
    throw ParseError("$.sketch", "must be one of \"raw\", \"map\", \"foldr\"");

  if (doc.contains("options")) {
    const auto& opts = doc["options"];
    if (!opts.is_object()) throw ParseError("$.options", "must be an object");
    reject_unknown_fields(opts, {"timeout_ms", "solver"}, "$.options");
    if (opts.contains("timeout_ms")) {
      if (!opts["timeout_ms"].is_number_integer() || opts["timeout_ms"].get<int>() <= 0)
        throw ParseError("$.options.timeout_ms", "must be a positive integer");
      p.options.timeout_ms = opts["timeout_ms"].get<int>();
    }
    if (opts.contains("solver")) {
      if (!opts["solver"].is_string()) throw ParseError("$.options.solver", "must be a string");
      p.options.solver = opts["solver"].get<std::string>();
    }
  }

  const auto& examples = require(doc, "examples", "$");
  if (!examples.is_array()) throw ParseError("$.examples", "must be an array");
  for (std::size_t i = 0; i < examples.size(); ++i) {
    std::string where = "$.examples[" + std::to_string(i) + "]";
    const auto& ex = examples[i];
    if (!ex.is_object()) throw ParseError(where, "must be an object");
    reject_unknown_fields(ex, {"extra", "inputs", "output", "base"}, where);
    IOExample io;
    if (ex.contains("extra")) io.extra = parse_value(ex["extra"], p.atoms, where + ".extra");
    const auto& inputs = require(ex, "inputs", where);
    if (!inputs.is_array()) throw ParseError(where + ".inputs", "must be an array");
    for (std::size_t k = 0; k < inputs.size(); ++k)
      io.inputs.push_back(
          parse_value(inputs[k], p.atoms, where + ".inputs[" + std::to_string(k) + "]"));
    io.output = parse_value(require(ex, "output", where), p.atoms, where + ".output");
    if (ex.contains("base")) io.base = parse_value(ex["base"], p.atoms, where + ".base");
    p.examples.push_back(std::move(io));
  }

  validate_problem(p);
  return p;
}

Problem load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open problem file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

std::string serialize_problem(const Problem& p) {
  json doc;
  doc["name"] = p.name;
  doc["signature"] = {{"extra", p.signature.extra.str()},
                      {"element", p.signature.element.str()},
                      {"result", p.signature.result.str()}};
  doc["sketch"] = to_string(p.sketch);
  json examples = json::array();
  for (const auto& ex : p.examples) {
    json e;
    if (p.sketch == SketchKind::Foldr) e["extra"] = value_to_json(ex.extra, p.atoms);
    json inputs = json::array();
    for (const auto& in : ex.inputs) inputs.push_back(value_to_json(in, p.atoms));
    e["inputs"] = inputs;
    e["output"] = value_to_json(ex.output, p.atoms);
    if (ex.base) e["base"] = value_to_json(*ex.base, p.atoms);
    examples.push_back(e);
  }
  doc["examples"] = examples;
  if (p.options.timeout_ms || p.options.solver) {
    json opts = json::object();
    if (p.options.timeout_ms) opts["timeout_ms"] = *p.options.timeout_ms;
    if (p.options.solver) opts["solver"] = *p.options.solver;
    doc["options"] = opts;
  }
  return doc.dump(2) + "\n";
}

void validate_problem(const Problem& p) {
  if (p.examples.empty()) throw ValidationError("problem '" + p.name + "' has no examples");
  const Signature& sig = p.signature;
  if (p.sketch != SketchKind::Foldr && !(sig.extra == Functor::unit()))
    throw ValidationError("extra argument functor is only meaningful for foldr sketches");

  auto type_error = [&](std::size_t i, const std::string& field, const Functor& f, const Value& v) {
    throw TypeError("example " + std::to_string(i) + ", field " + field + ": value " + v.str(&p.atoms) +
                    " does not inhabit " + f.str());
  };

  std::map<Value, Value> base_for_extra;
  for (std::size_t i = 0; i < p.examples.size(); ++i) {
    const auto& ex = p.examples[i];
    if (!typecheck(sig.extra, ex.extra)) type_error(i, "extra", sig.extra, ex.extra);
    for (std::size_t k = 0; k < ex.inputs.size(); ++k)
      if (!typecheck(sig.element, ex.inputs[k]))
        type_error(i, "inputs[" + std::to_string(k) + "]", sig.element, ex.inputs[k]);
    switch (p.sketch) {
      case SketchKind::Raw:
        if (ex.inputs.size() != 1)
          throw ValidationError("example " + std::to_string(i) + ": raw examples take exactly one input");
        if (!typecheck(sig.result, ex.output)) type_error(i, "output", sig.result, ex.output);
        if (ex.base) throw ValidationError("example " + std::to_string(i) + ": base is only allowed for foldr");
        break;
      case SketchKind::Map: {
        Functor out = Functor::list(sig.result);
        if (!typecheck(out, ex.output)) type_error(i, "output", out, ex.output);
        if (ex.base) throw ValidationError("example " + std::to_string(i) + ": base is only allowed for foldr");
        break;
      }
      case SketchKind::Foldr: {
        if (!typecheck(sig.result, ex.output)) type_error(i, "output", sig.result, ex.output);
        if (!ex.base) throw ValidationError("example " + std::to_string(i) + ": foldr examples need a base");
        if (!typecheck(sig.result, *ex.base)) type_error(i, "base", sig.result, *ex.base);
        auto [it, inserted] = base_for_extra.try_emplace(ex.extra, *ex.base);
        if (!inserted && !(it->second == *ex.base))
          throw ValidationError("example " + std::to_string(i) + ": base " + ex.base->str(&p.atoms) +
                                " differs from base " + it->second.str(&p.atoms) +
                                " given for the same extra argument " + ex.extra.str(&p.atoms));
        break;
      }
    }
  }
}

AtomTable intern_atoms(Problem& p) {
  AtomTable fresh;
  const AtomTable old = p.atoms;
  map_atoms(p, [&](Atom a) { return fresh.intern(old.label(a)); });
  p.atoms = fresh;
  return fresh;
}

}  // namespace parachk
