#include "random_instances.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace parachk::testing {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
  return xs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(xs.size()) - 1))];
}

std::string atom_label(int i) { return std::string(1, static_cast<char>('A' + i)); }

/// Memoized random container morphism, extended lazily at each new input
/// shape.
class Morphism {
 public:
  Morphism(Rng& rng, Functor out, const GenLimits& limits) : rng_(rng), out_(std::move(out)), limits_(limits) {}

  Extension apply(const std::vector<Extension>& parts) {
    InputShape key;
    std::vector<Atom> elements;
    for (const auto& e : parts) {
      key.push_back(e.shape);
      elements.insert(elements.end(), e.elements.begin(), e.elements.end());
    }
    auto it = table_.find(key);
    if (it == table_.end()) it = table_.emplace(key, invent(elements.size())).first;
    Extension y{out_, it->second.first, {}};
    for (auto p : it->second.second) y.elements.push_back(elements[p]);
    return y;
  }

 private:
  std::pair<Shape, std::vector<std::size_t>> invent(std::size_t inputs) {
    AtomTable scratch;
    for (int attempt = 0; attempt < 200; ++attempt) {
      Value v = random_value(rng_, out_, scratch, 1, limits_.max_output);
      Shape s = shape_of(out_, v);
      std::size_t n = size_of(out_, s);
      if (n > static_cast<std::size_t>(limits_.max_output) || (inputs == 0 && n > 0)) continue;
      std::vector<std::size_t> positions;
      for (std::size_t q = 0; q < n; ++q) positions.push_back(static_cast<std::size_t>(uniform(rng_, 0, static_cast<int>(inputs) - 1)));
      return {s, positions};
    }
    throw std::runtime_error("no output shape fits " + out_.str());
  }

  Rng& rng_;
  Functor out_;
  GenLimits limits_;
  std::map<InputShape, std::pair<Shape, std::vector<std::size_t>>> table_;
};

/// A value of `f` with at most `max_positions` atoms.
Value bounded_value(Rng& rng, const Functor& f, AtomTable& atoms, const GenLimits& limits, int max_positions) {
  for (int attempt = 0;; ++attempt) {
    Value v = random_value(rng, f, atoms, limits.atoms, 3);
    if (size_of(f, shape_of(f, v)) <= static_cast<std::size_t>(max_positions) || attempt > 200) return v;
  }
}

Value perturb_value(Rng& rng, const Functor& f, const Value& v, AtomTable& atoms, const GenLimits& limits) {
  Extension e = to_extension(f, v);
  if (!e.elements.empty() && coin(rng, 0.6)) {
    auto& slot = e.elements[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(e.elements.size()) - 1))];
    slot = atoms.intern(atom_label(uniform(rng, 0, limits.atoms - 1)));
    return from_extension(e);
  }
  return bounded_value(rng, f, atoms, limits, limits.max_output);
}

Problem make_problem(const std::string& name, SketchKind sketch, Signature sig) {
  Problem p;
  p.name = name;
  p.sketch = sketch;
  p.signature = std::move(sig);
  return p;
}

}  // namespace

Functor random_functor(Rng& rng, int depth) {
  int k = uniform(rng, 0, depth > 0 ? 10 : 5);
  switch (k) {
    case 0:
    case 1:
    case 2: return Functor::id();
    case 3: return Functor::unit();
    case 4: return Functor::integer();
    case 5: return Functor::boolean();
    case 6:
    case 7: return Functor::list(random_functor(rng, depth - 1));
    case 8:
    case 9: return Functor::prod(random_functor(rng, depth - 1), random_functor(rng, depth - 1));
    default: return Functor::maybe(random_functor(rng, depth - 1));
  }
}

Value random_value(Rng& rng, const Functor& f, AtomTable& atoms, int pool, int max_list) {
  switch (f.kind()) {
    case Functor::Kind::Id: return Value::atom(atoms.intern(atom_label(uniform(rng, 0, pool - 1))));
    case Functor::Kind::Unit: return Value::unit();
    case Functor::Kind::Int: return Value::integer(uniform(rng, -3, 3));
    case Functor::Kind::Bool: return Value::boolean(coin(rng));
    case Functor::Kind::List: {
      std::vector<Value> items;
      int n = uniform(rng, 0, max_list);
      for (int i = 0; i < n; ++i) items.push_back(random_value(rng, f.inner(), atoms, pool, max_list));
      return Value::list(std::move(items));
    }
    case Functor::Kind::Prod:
      return Value::pair(random_value(rng, f.left(), atoms, pool, max_list),
                         random_value(rng, f.right(), atoms, pool, max_list));
    case Functor::Kind::Maybe:
      return coin(rng) ? Value::just(random_value(rng, f.inner(), atoms, pool, max_list)) : Value::nothing();
  }
  return Value::unit();
}

Problem random_foldr(Rng& rng, const GenLimits& limits, bool perturb) {
  static const std::vector<std::string> extras{"Unit", "Int", "List(Id)"};
  static const std::vector<std::string> elements{"Id", "Prod(Id,Id)"};
  static const std::vector<std::string> results{"List(Id)", "Maybe(Id)", "Id", "Prod(List(Id),List(Id))", "Int"};
  Signature sig{Functor::parse(pick(rng, extras)), Functor::parse(pick(rng, elements)),
                Functor::parse(pick(rng, results))};
  Problem p = make_problem("random foldr", SketchKind::Foldr, sig);
  Morphism f(rng, sig.result, limits);

  // distinct extra shapes
  std::vector<Value> extra_values;
  int want = sig.extra.kind() == Functor::Kind::Unit ? 1 : uniform(rng, 1, limits.max_extras);
  std::vector<int> sizes{0, 1, 2};
  std::shuffle(sizes.begin(), sizes.end(), rng);
  for (int i = 0; i < want; ++i) {
    switch (sig.extra.kind()) {
      case Functor::Kind::Int: extra_values.push_back(Value::integer(sizes[static_cast<std::size_t>(i)])); break;
      case Functor::Kind::List: {
        std::vector<Value> items;
        for (int k = 0; k < sizes[static_cast<std::size_t>(i)]; ++k)
          items.push_back(random_value(rng, Functor::id(), p.atoms, limits.atoms));
        extra_values.push_back(Value::list(items));
        break;
      }
      default: extra_values.push_back(Value::unit());
    }
  }

  for (const auto& extra : extra_values) {
    Value base = bounded_value(rng, sig.result, p.atoms, limits, limits.max_output);
    int longest = uniform(rng, 1, limits.max_length);
    for (int n = coin(rng, 0.2) ? 0 : 1; n <= longest; ++n) {
      IOExample ex;
      ex.extra = extra;
      ex.base = base;
      for (int k = 0; k < n; ++k) ex.inputs.push_back(random_value(rng, sig.element, p.atoms, limits.atoms));
      Extension h = to_extension(sig.extra, extra);
      Extension y = to_extension(sig.result, base);
      for (int k = n; k-- > 0;) y = f.apply({h, to_extension(sig.element, ex.inputs[static_cast<std::size_t>(k)]), y});
      ex.output = from_extension(y);
      p.examples.push_back(std::move(ex));
    }
  }
  std::shuffle(p.examples.begin(), p.examples.end(), rng);
  if (perturb) {
    auto& ex = p.examples[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(p.examples.size()) - 1))];
    ex.output = perturb_value(rng, sig.result, ex.output, p.atoms, limits);
    if (ex.inputs.empty()) ex.base = ex.output;  // keep the base consistent per extra
    for (auto& other : p.examples)
      if (other.extra == ex.extra) other.base = ex.base;
    for (auto& other : p.examples)
      if (other.extra == ex.extra && other.inputs.empty()) other.output = *other.base;
  }
  return p;
}

Problem random_raw(Rng& rng, const GenLimits& limits, bool perturb) {
  static const std::vector<std::string> inputs{"List(Id)", "Prod(Id,List(Id))", "Maybe(Id)", "Prod(Id,Id)",
                                               "List(Prod(Id,Id))"};
  static const std::vector<std::string> results{"List(Id)", "Maybe(Id)", "Prod(Maybe(Id),List(Id))", "Bool", "Int"};
  Signature sig{Functor::unit(), Functor::parse(pick(rng, inputs)), Functor::parse(pick(rng, results))};
  Problem p = make_problem("random raw", SketchKind::Raw, sig);
  Morphism f(rng, sig.result, limits);
  int n = uniform(rng, 1, 5);
  for (int i = 0; i < n; ++i) {
    IOExample ex;
    ex.inputs.push_back(random_value(rng, sig.element, p.atoms, limits.atoms));
    ex.output = from_extension(f.apply({to_extension(sig.element, ex.inputs.front())}));
    p.examples.push_back(std::move(ex));
  }
  if (perturb) {
    auto& ex = p.examples[static_cast<std::size_t>(uniform(rng, 0, n - 1))];
    ex.output = perturb_value(rng, sig.result, ex.output, p.atoms, limits);
  }
  return p;
}

Problem random_map(Rng& rng, const GenLimits& limits, bool perturb) {
  static const std::vector<std::string> inputs{"Id", "Prod(Id,Id)", "Maybe(Id)"};
  static const std::vector<std::string> results{"Maybe(Id)", "List(Id)", "Prod(Maybe(Id),Bool)"};
  Signature sig{Functor::unit(), Functor::parse(pick(rng, inputs)), Functor::parse(pick(rng, results))};
  Problem p = make_problem("random map", SketchKind::Map, sig);
  Morphism f(rng, sig.result, limits);
  int n = uniform(rng, 1, 3);
  for (int i = 0; i < n; ++i) {
    IOExample ex;
    std::vector<Value> outs;
    int len = uniform(rng, 0, 3);
    for (int k = 0; k < len; ++k) {
      ex.inputs.push_back(random_value(rng, sig.element, p.atoms, limits.atoms));
      outs.push_back(from_extension(f.apply({to_extension(sig.element, ex.inputs.back())})));
    }
    ex.output = Value::list(outs);
    p.examples.push_back(std::move(ex));
  }
  if (perturb) {
    auto& ex = p.examples[static_cast<std::size_t>(uniform(rng, 0, n - 1))];
    if (!ex.output.items().empty()) {
      std::vector<Value> outs = ex.output.items();
      auto& item = outs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(outs.size()) - 1))];
      item = perturb_value(rng, sig.result, item, p.atoms, limits);
      ex.output = Value::list(outs);
    }
  }
  return p;
}

Problem random_problem(Rng& rng, const GenLimits& limits, bool perturb) {
  switch (uniform(rng, 0, 2)) {
    case 0: return random_foldr(rng, limits, perturb);
    case 1: return random_raw(rng, limits, perturb);
    default: return random_map(rng, limits, perturb);
  }
}

IOExample random_extra_example(Rng& rng, Problem& p, const GenLimits& limits) {
  const Signature& sig = p.signature;
  IOExample ex;
  switch (p.sketch) {
    case SketchKind::Raw:
      ex.inputs.push_back(random_value(rng, sig.element, p.atoms, limits.atoms));
      ex.output = bounded_value(rng, sig.result, p.atoms, limits, limits.max_output);
      break;
    case SketchKind::Map: {
      std::vector<Value> outs;
      int len = uniform(rng, 0, 3);
      for (int k = 0; k < len; ++k) {
        ex.inputs.push_back(random_value(rng, sig.element, p.atoms, limits.atoms));
        outs.push_back(bounded_value(rng, sig.result, p.atoms, limits, limits.max_output));
      }
      ex.output = Value::list(outs);
      break;
    }
    case SketchKind::Foldr: {
      // reuse an extra argument; stay within the lengths already present
      const IOExample& model = pick(rng, p.examples);
      std::size_t longest = 1;
      for (const auto& other : p.examples)
        if (other.extra == model.extra) longest = std::max(longest, other.inputs.size());
      ex.extra = model.extra;
      ex.base = model.base;
      int n = uniform(rng, 1, static_cast<int>(longest));
      for (int k = 0; k < n; ++k) ex.inputs.push_back(random_value(rng, sig.element, p.atoms, limits.atoms));
      ex.output = bounded_value(rng, sig.result, p.atoms, limits, limits.max_output);
      break;
    }
  }
  return ex;
}

Problem relabel_atoms(const Problem& p, Rng& rng) {
  Problem q = p;
  const std::size_t n = p.atoms.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  AtomTable fresh;
  for (auto i : order) fresh.intern("r" + std::to_string(i));
  map_atoms(q, [&](Atom a) { return *fresh.find("r" + std::to_string(a.code)); });
  q.atoms = fresh;
  return q;
}

Problem shuffle_examples(const Problem& p, Rng& rng) {
  Problem q = p;
  std::shuffle(q.examples.begin(), q.examples.end(), rng);
  return q;
}

Problem add_constant_argument(const Problem& p, std::int64_t c) {
  Problem q = p;
  switch (p.sketch) {
    case SketchKind::Foldr:
      if (p.signature.extra.kind() != Functor::Kind::Unit)
        throw std::invalid_argument("foldr problem already has an extra argument");
      q.signature.extra = Functor::integer();
      for (auto& ex : q.examples) ex.extra = Value::integer(c);
      break;
    case SketchKind::Raw:
      q.signature.element = Functor::prod(Functor::integer(), p.signature.element);
      for (auto& ex : q.examples) ex.inputs.front() = Value::pair(Value::integer(c), ex.inputs.front());
      break;
    case SketchKind::Map:
      q.signature.element = Functor::prod(Functor::integer(), p.signature.element);
      for (auto& ex : q.examples)
        for (auto& in : ex.inputs) in = Value::pair(Value::integer(c), in);
      break;
  }
  return q;
}

}  // namespace parachk::testing
