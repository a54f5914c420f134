#include "parachk/corpus.hpp"

#include <functional>
#include <sstream>

namespace parachk {

namespace {

using Fold = std::function<Value(const Value& extra, const std::vector<Value>& xs)>;

struct Builder {
  Problem p;

  Value atom(const std::string& label) { return Value::atom(p.atoms.intern(label)); }

  /// "A B C" -> the atoms A, B, C
  std::vector<Value> atoms(const std::string& labels) {
    std::istringstream in(labels);
    std::vector<Value> out;
    for (std::string l; in >> l;) out.push_back(atom(l));
    return out;
  }

  Value list(const std::string& labels) { return Value::list(atoms(labels)); }
};

std::vector<Value> take_n(const std::vector<Value>& xs, std::size_t n) {
  return {xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(std::min(n, xs.size()))};
}

std::vector<Value> drop_n(const std::vector<Value>& xs, std::size_t n) {
  return {xs.begin() + static_cast<std::ptrdiff_t>(std::min(n, xs.size())), xs.end()};
}

std::vector<Value> concat(std::vector<Value> a, const std::vector<Value>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Value maybe_at(const std::vector<Value>& xs, std::int64_t k) {
  if (k < 0 || k >= static_cast<std::int64_t>(xs.size())) return Value::nothing();
  return Value::just(xs[static_cast<std::size_t>(k)]);
}

BenchEntry make_entry(const std::string& name, const std::string& h, const std::string& f,
                      const std::string& g, bool expected, Builder b,
                      const std::vector<std::pair<Value, std::vector<Value>>>& inputs,
                      const std::function<Value(const Value&)>& base, const Fold& fold) {
  Problem& p = b.p;
  p.name = name;
  p.sketch = SketchKind::Foldr;
  p.signature = {Functor::parse(h), Functor::parse(f), Functor::parse(g)};
  for (const auto& [extra, xs] : inputs) p.examples.push_back({extra, xs, fold(extra, xs), base(extra)});
  validate_problem(p);
  return {name, p, every_other(p), expected};
}

std::vector<BenchEntry> build() {
  std::vector<BenchEntry> out;
  const Value unit = Value::unit();
  auto no_extra = [&](Builder& b, std::initializer_list<const char*> lists) {
    std::vector<std::pair<Value, std::vector<Value>>> in;
    for (const char* l : lists) in.push_back({unit, b.atoms(l)});
    return in;
  };
  auto with_int = [&](Builder& b, std::initializer_list<std::pair<int, const char*>> lists) {
    std::vector<std::pair<Value, std::vector<Value>>> in;
    for (const auto& [k, l] : lists) in.push_back({Value::integer(k), b.atoms(l)});
    return in;
  };
  auto with_list = [&](Builder& b, std::initializer_list<std::pair<const char*, const char*>> lists) {
    std::vector<std::pair<Value, std::vector<Value>>> in;
    for (const auto& [ys, xs] : lists) in.push_back({b.list(ys), b.atoms(xs)});
    return in;
  };
  auto const_base = [](Value v) { return [v](const Value&) { return v; }; };
  const Value empty = Value::list({});

  {
    Builder b;
    auto in = no_extra(b, {"A B C D", "E", "F G H", "I J"});
    out.push_back(make_entry("null", "Unit", "Id", "Bool", true, b, in, const_base(Value::boolean(true)),
                             [](const Value&, const auto& xs) { return Value::boolean(xs.empty()); }));
  }
  {
    Builder b;
    auto in = no_extra(b, {"A B C D", "E", "F G H", "I J"});
    out.push_back(make_entry("length", "Unit", "Id", "Int", true, b, in, const_base(Value::integer(0)),
                             [](const Value&, const auto& xs) {
                               return Value::integer(static_cast<std::int64_t>(xs.size()));
                             }));
  }
  {
    Builder b;
    auto in = no_extra(b, {"A B C D", "E", "F G H", "I J"});
    out.push_back(make_entry("head", "Unit", "Id", "Maybe(Id)", true, b, in, const_base(Value::nothing()),
                             [](const Value&, const auto& xs) { return maybe_at(xs, 0); }));
  }
  {
    Builder b;
    auto in = no_extra(b, {"A B C D", "E", "F G H", "I J"});
    out.push_back(make_entry("last", "Unit", "Id", "Maybe(Id)", true, b, in, const_base(Value::nothing()),
                             [](const Value&, const auto& xs) {
                               return maybe_at(xs, static_cast<std::int64_t>(xs.size()) - 1);
                             }));
  }
  {
    // examples 0 and 2 alone are already contradictory
    Builder b;
    auto in = no_extra(b, {"A B C", "F", "D E", "G H I J"});
    out.push_back(make_entry("tail", "Unit", "Id", "List(Id)", false, b, in, const_base(empty),
                             [](const Value&, const auto& xs) { return Value::list(drop_n(xs, 1)); }));
  }
  {
    Builder b;
    auto in = no_extra(b, {"A B", "P Q R S", "C", "X Y Z"});
    out.push_back(make_entry("init", "Unit", "Id", "List(Id)", false, b, in, const_base(empty),
                             [](const Value&, const auto& xs) {
                               return Value::list(take_n(xs, xs.empty() ? 0 : xs.size() - 1));
                             }));
  }
  {
    Builder b;
    auto in = no_extra(b, {"A B C D", "E", "F G H", "I J"});
    out.push_back(make_entry("reverse", "Unit", "Id", "List(Id)", true, b, in, const_base(empty),
                             [](const Value&, const auto& xs) {
                               return Value::list({xs.rbegin(), xs.rend()});
                             }));
  }
  {
    Builder b;
    auto in = with_int(b, {{1, "A B"}, {0, "D E"}, {1, "C"}, {0, "F"}, {1, "G H I"}, {0, "J K L"}});
    out.push_back(make_entry("index", "Int", "Id", "Maybe(Id)", false, b, in, const_base(Value::nothing()),
                             [](const Value& k, const auto& xs) { return maybe_at(xs, k.as_int()); }));
  }
  {
    Builder b;
    auto in = with_int(
        b, {{1, "A B C"}, {0, "G"}, {1, "D E"}, {0, "H I"}, {1, "F"}, {2, "J"}, {2, "K L"}, {2, "M N O"}});
    out.push_back(make_entry("drop", "Int", "Id", "List(Id)", false, b, in, const_base(empty),
                             [](const Value& k, const auto& xs) {
                               return Value::list(drop_n(xs, static_cast<std::size_t>(k.as_int())));
                             }));
  }
  {
    Builder b;
    auto in = with_int(b, {{1, "A B C"}, {2, "D E F"}, {1, "G H"}, {2, "I J"}, {1, "K"}, {2, "L"}});
    out.push_back(make_entry("take", "Int", "Id", "List(Id)", true, b, in, const_base(empty),
                             [](const Value& k, const auto& xs) {
                               return Value::list(take_n(xs, static_cast<std::size_t>(k.as_int())));
                             }));
  }
  {
    Builder b;
    auto in = with_int(b, {{1, "A B C"}, {2, "D E F"}, {1, "G H"}, {2, "I J"}, {1, "K"}, {2, "L"}});
    out.push_back(make_entry("splitAt", "Int", "Id", "Prod(List(Id),List(Id))", true, b, in,
                             const_base(Value::pair(empty, empty)), [](const Value& k, const auto& xs) {
                               auto n = static_cast<std::size_t>(k.as_int());
                               return Value::pair(Value::list(take_n(xs, n)), Value::list(drop_n(xs, n)));
                             }));
  }
  {
    // the extra argument is the second list; the fold runs over the first
    Builder b;
    auto in = with_list(b, {{"P", "A B C"}, {"Q R", "D E"}, {"P", "F G"}, {"Q R", "H"}, {"P", "I"}});
    out.push_back(make_entry("append", "List(Id)", "Id", "List(Id)", true, b, in,
                             [](const Value& ys) { return ys; },
                             [](const Value& ys, const auto& xs) { return Value::list(concat(xs, ys.items())); }));
  }
  {
    // the extra argument is the first list; the fold runs over the second
    Builder b;
    auto in = with_list(b, {{"P", "A B C"}, {"Q R", "D E"}, {"P", "F G"}, {"Q R", "H"}, {"P", "I"}});
    out.push_back(make_entry("prepend", "List(Id)", "Id", "List(Id)", true, b, in,
                             [](const Value& xs) { return xs; },
                             [](const Value& xs, const auto& ys) { return Value::list(concat(xs.items(), ys)); }));
  }
  {
    Builder b;
    auto in = with_list(b, {{"P Q", "A B C"}, {"R S T", "D E"}, {"P Q", "F G"}, {"R S T", "H"}, {"P Q", "I"}});
    out.push_back(make_entry("zip", "List(Id)", "Id", "List(Prod(Id,Id))", true, b, in, const_base(empty),
                             [](const Value& ys, const auto& xs) {
                               std::vector<Value> pairs;
                               for (std::size_t i = 0; i < xs.size() && i < ys.items().size(); ++i)
                                 pairs.push_back(Value::pair(xs[i], ys.items()[i]));
                               return Value::list(pairs);
                             }));
  }
  {
    Builder b;
    std::vector<std::pair<Value, std::vector<Value>>> in;
    for (const char* l : {"A B C D E F", "G H", "I J K L", "M N P Q R S T U"}) {
      auto flat = b.atoms(l);
      std::vector<Value> xs;
      for (std::size_t i = 0; i + 1 < flat.size(); i += 2) xs.push_back(Value::pair(flat[i], flat[i + 1]));
      in.push_back({unit, xs});
    }
    out.push_back(make_entry("unzip", "Unit", "Prod(Id,Id)", "Prod(List(Id),List(Id))", true, b, in,
                             const_base(Value::pair(empty, empty)), [](const Value&, const auto& xs) {
                               std::vector<Value> l, r;
                               for (const auto& x : xs) {
                                 l.push_back(x.first());
                                 r.push_back(x.second());
                               }
                               return Value::pair(Value::list(l), Value::list(r));
                             }));
  }
  {
    Builder b;
    std::vector<std::pair<Value, std::vector<Value>>> in;
    auto lists = [&](std::initializer_list<const char*> ls) {
      std::vector<Value> xs;
      for (const char* l : ls) xs.push_back(b.list(l));
      in.push_back({unit, xs});
    };
    lists({"A B", "C"});
    lists({"D"});
    lists({"", "E F", "G"});
    lists({"J", "", "K L", "M"});
    out.push_back(make_entry("concat", "Unit", "List(Id)", "List(Id)", true, b, in, const_base(empty),
                             [](const Value&, const auto& xs) {
                               std::vector<Value> flat;
                               for (const auto& x : xs) flat = concat(flat, x.items());
                               return Value::list(flat);
                             }));
  }
  return out;
}

}  // namespace

Problem every_other(const Problem& p) {
  Problem q = p;
  q.examples.clear();
  for (std::size_t i = 0; i < p.examples.size(); i += 2) q.examples.push_back(p.examples[i]);
  return q;
}

const std::vector<BenchEntry>& benchmark_corpus() {
  static const std::vector<BenchEntry> corpus = build();
  return corpus;
}

}  // namespace parachk
