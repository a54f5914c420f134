#include "parachk/oracle.hpp"

#include <algorithm>
#include <limits>

#include "parachk/error.hpp"

namespace parachk {

namespace {

std::string describe_key(const InputShape& in) {
  std::string out = "(";
  for (std::size_t i = 0; i < in.size(); ++i) out += (i ? ", " : "") + in[i].str();
  return out + ")";
}

/// Union-find over element nodes with an undo trail; no path compression
/// so that every union can be rolled back.
class Classes {
 public:
  explicit Classes(const std::vector<std::optional<Atom>>& nodes)
      : parent_(nodes.size()), size_(nodes.size(), 1), constant_(nodes) {
    for (std::size_t i = 0; i < parent_.size(); ++i) parent_[i] = static_cast<int>(i);
  }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return true;
    if (constant_[a] && constant_[b] && !(*constant_[a] == *constant_[b])) return false;
    if (size_[a] > size_[b]) std::swap(a, b);
    trail_.push_back({a, b, constant_[b]});
    parent_[a] = b;
    size_[b] += size_[a];
    if (!constant_[b]) constant_[b] = constant_[a];
    return true;
  }

  std::size_t mark() const { return trail_.size(); }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [child, root, old] = trail_.back();
      trail_.pop_back();
      parent_[child] = child;
      size_[root] -= size_[child];
      constant_[root] = old;
    }
  }

  const std::optional<Atom>& constant(int x) const { return constant_[find(x)]; }

 private:
  struct Entry {
    int child;
    int root;
    std::optional<Atom> old;
  };
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<std::optional<Atom>> constant_;
  std::vector<Entry> trail_;
};

struct Key {
  const InputShape* input;
  std::int64_t q;
  std::size_t domain;
  std::vector<const GroundConstraint*> members;
};

class Search {
 public:
  Search(std::vector<Key> keys, Classes& classes)
      : keys_(std::move(keys)), classes_(classes), choice_(keys_.size(), -1) {}

  bool run() { return step(0); }
  std::int64_t choice(std::size_t k) const { return choice_[k]; }

 private:
  bool assign(std::size_t k, std::size_t p) {
    const Key& key = keys_[k];
    for (const auto* c : key.members)
      if (!classes_.unite(c->input_nodes[p], c->output_nodes[static_cast<std::size_t>(key.q)])) return false;
    return true;
  }

  bool step(std::size_t assigned) {
    if (assigned == keys_.size()) return true;
    // most constrained key first
    std::size_t best = keys_.size();
    std::vector<std::size_t> best_options;
    for (std::size_t k = 0; k < keys_.size(); ++k) {
      if (choice_[k] >= 0) continue;
      std::vector<std::size_t> options;
      for (std::size_t p = 0; p < keys_[k].domain; ++p) {
        auto m = classes_.mark();
        if (assign(k, p)) options.push_back(p);
        classes_.undo(m);
        if (best < keys_.size() && options.size() >= best_options.size()) break;
      }
      if (best == keys_.size() || options.size() < best_options.size()) {
        best = k;
        best_options = std::move(options);
        if (best_options.empty()) return false;
      }
    }
    for (auto p : best_options) {
      auto m = classes_.mark();
      if (assign(best, p)) {
        choice_[best] = static_cast<std::int64_t>(p);
        if (step(assigned + 1)) return true;
        choice_[best] = -1;
      }
      classes_.undo(m);
    }
    return false;
  }

  std::vector<Key> keys_;
  Classes& classes_;
  std::vector<std::int64_t> choice_;
};

}  // namespace

GroundInstance ground(const ConstraintSet& cs) {
  GroundInstance g;
  g.output_functor = cs.output_functor;
  std::map<int, Shape> resolved;
  std::map<InputShape, Shape> forced;

  auto input_key = [&](const MorphismConstraint& c) -> std::optional<InputShape> {
    InputShape key;
    for (const auto& part : c.input) {
      if (const auto* e = std::get_if<Extension>(&part)) {
        key.push_back(e->shape);
      } else {
        auto it = resolved.find(std::get<Intermediate>(part).id);
        if (it == resolved.end()) return std::nullopt;
        key.push_back(it->second);
      }
    }
    return key;
  };

  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& c : cs.constraints) {
      auto key = input_key(c);
      if (!key) continue;
      std::optional<Shape> out;
      if (const auto* e = std::get_if<Extension>(&c.output)) {
        out = e->shape;
      } else if (auto it = resolved.find(std::get<Intermediate>(c.output).id); it != resolved.end()) {
        out = it->second;
      }
      auto known = forced.find(*key);
      if (out && known == forced.end()) {
        forced.emplace(*key, *out);
        changed = true;
      } else if (out && !(known->second == *out)) {
        g.conflict = "shape conflict: input " + describe_key(*key) + " must map to both " +
                     known->second.str() + " and " + out->str();
        return g;
      } else if (!out && known != forced.end()) {
        resolved.emplace(std::get<Intermediate>(c.output).id, known->second);
        changed = true;
      }
    }
  }
  for (int k = 0; k < cs.intermediates; ++k)
    if (!resolved.count(k))
      throw OracleError("the shape of intermediate " + std::to_string(k) +
                        " is not forced by the examples (not shape complete)");
  g.intermediate_shapes = resolved;

  std::map<std::int64_t, int> atom_nodes;
  auto atom_node = [&](Atom a) {
    auto [it, inserted] = atom_nodes.try_emplace(a.code, static_cast<int>(g.nodes.size()));
    if (inserted) g.nodes.push_back(a);
    return it->second;
  };
  std::map<int, std::vector<int>> variable_nodes;
  for (const auto& [k, shape] : resolved) {
    std::size_t n = size_of(cs.output_functor, shape);
    for (std::size_t q = 0; q < n; ++q) {
      int node = static_cast<int>(g.nodes.size());
      g.nodes.push_back(std::nullopt);
      g.variables.emplace(node, std::make_pair(k, q));
      variable_nodes[k].push_back(node);
    }
  }
  auto nodes_of = [&](const SymbolicContainer& c, Shape& shape) {
    std::vector<int> out;
    if (const auto* e = std::get_if<Extension>(&c)) {
      shape = e->shape;
      for (auto a : e->elements) out.push_back(atom_node(a));
    } else {
      int k = std::get<Intermediate>(c).id;
      shape = resolved.at(k);
      out = variable_nodes[k];
    }
    return out;
  };

  for (std::size_t i = 0; i < cs.constraints.size(); ++i) {
    const auto& c = cs.constraints[i];
    GroundConstraint gc;
    gc.constraint = static_cast<int>(i);
    for (const auto& part : c.input) {
      Shape s = Shape::unit();
      auto nodes = nodes_of(part, s);
      gc.input.push_back(s);
      gc.input_nodes.insert(gc.input_nodes.end(), nodes.begin(), nodes.end());
    }
    gc.output_nodes = nodes_of(c.output, gc.output);
    g.input_shapes.insert(gc.input);
    g.constraints.push_back(std::move(gc));
  }
  return g;
}

Verdict oracle_check(const GroundInstance& g, const OracleBounds& bounds) {
  if (g.conflict) return Unrealizable{*g.conflict};
  if (g.input_shapes.size() > bounds.max_input_shapes)
    throw OracleError(std::to_string(g.input_shapes.size()) + " distinct input shapes exceed the bound of " +
                      std::to_string(bounds.max_input_shapes));

  std::map<InputShape, std::vector<const GroundConstraint*>> by_shape;
  for (const auto& c : g.constraints) {
    if (c.input_nodes.size() > bounds.max_positions || c.output_nodes.size() > bounds.max_positions)
      throw OracleError("constraint " + std::to_string(c.constraint) + " exceeds " +
                        std::to_string(bounds.max_positions) + " positions");
    auto& group = by_shape[c.input];
    if (!group.empty() && !(group.front()->output == c.output))
      return Unrealizable{"shape conflict: input " + describe_key(c.input) + " must map to both " +
                          group.front()->output.str() + " and " + c.output.str()};
    group.push_back(&c);
  }

  std::vector<Key> keys;
  for (const auto& [input, group] : by_shape) {
    const auto* first = group.front();
    for (std::size_t q = 0; q < first->output_nodes.size(); ++q) {
      if (first->input_nodes.empty())
        return Unrealizable{"input " + describe_key(input) + " has no positions to fill output position " +
                            std::to_string(q)};
      keys.push_back({&input, static_cast<std::int64_t>(q), first->input_nodes.size(), group});
    }
  }

  Classes classes(g.nodes);
  Search search(keys, classes);
  if (!search.run()) return Unrealizable{"no position assignment satisfies the element equalities"};

  WitnessSummary w;
  for (const auto& [input, group] : by_shape) w.shape_table.emplace(input, group.front()->output);
  for (const auto& [input, group] : by_shape) w.position_table[input];
  for (std::size_t k = 0; k < keys.size(); ++k) {
    auto& ps = w.position_table[*keys[k].input];
    if (ps.size() <= static_cast<std::size_t>(keys[k].q)) ps.resize(static_cast<std::size_t>(keys[k].q) + 1);
    ps[static_cast<std::size_t>(keys[k].q)] = search.choice(k);
  }

  std::int64_t fresh = 0;
  for (const auto& n : g.nodes)
    if (n) fresh = std::max(fresh, n->code + 1);
  std::map<int, std::int64_t> fresh_for_class;
  std::map<int, std::vector<Atom>> elements;
  for (const auto& [node, origin] : g.variables) {
    Atom a;
    if (const auto& c = classes.constant(node)) {
      a = *c;
    } else {
      auto [it, inserted] = fresh_for_class.try_emplace(classes.find(node), fresh);
      if (inserted) ++fresh;
      a = Atom{it->second};
    }
    auto& list = elements[origin.first];
    if (list.size() <= origin.second) list.resize(origin.second + 1);
    list[origin.second] = a;
  }
  for (const auto& [k, shape] : g.intermediate_shapes)
    w.intermediates.emplace(k, Extension{g.output_functor, shape, elements[k]});
  return Realizable{std::move(w)};
}

Verdict oracle(const Problem& p, const OracleBounds& bounds) {
  validate_problem(p);
  if (p.sketch == SketchKind::Foldr) {
    Completeness c = shape_complete(p);
    if (!c.complete) {
      std::string msg = "examples are not shape complete; missing:";
      for (const auto& m : c.missing) msg += " " + m + ";";
      throw OracleError(msg);
    }
  }
  ConstraintSet cs = propagate(p);
  if (cs.refutation) return Unrealizable{*cs.refutation};
  return oracle_check(ground(cs), bounds);
}

}  // namespace parachk
