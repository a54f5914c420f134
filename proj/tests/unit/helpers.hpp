#pragma once

#include <string>

#include "parachk/problem.hpp"
#include "parachk/solver.hpp"

namespace parachk::testing {

inline Value atom(Problem& p, const std::string& label) { return Value::atom(p.atoms.intern(label)); }

inline Value atoms(Problem& p, const std::string& labels) {
  std::vector<Value> out;
  for (char c : labels)
    if (c != ' ') out.push_back(atom(p, std::string(1, c)));
  return Value::list(out);
}

/// Foldr problem over lists of atoms, Unit extra, G = List(Id), base [].
/// Each example is "input>output", e.g. "ABC>BC".
inline Problem list_fold(std::initializer_list<const char*> examples, const char* result = "List(Id)") {
  Problem p;
  p.name = "fold";
  p.sketch = SketchKind::Foldr;
  p.signature = {Functor::unit(), Functor::id(), Functor::parse(result)};
  for (const char* ex : examples) {
    std::string s(ex);
    auto cut = s.find('>');
    IOExample io;
    Value xs = atoms(p, s.substr(0, cut));
    io.inputs = xs.items();
    io.output = atoms(p, s.substr(cut + 1));
    io.base = Value::list({});
    p.examples.push_back(io);
  }
  return p;
}

/// Raw problem on lists of atoms, examples as for list_fold.
inline Problem list_raw(std::initializer_list<const char*> examples) {
  Problem p;
  p.name = "raw";
  p.sketch = SketchKind::Raw;
  p.signature = {Functor::unit(), Functor::parse("List(Id)"), Functor::parse("List(Id)")};
  for (const char* ex : examples) {
    std::string s(ex);
    auto cut = s.find('>');
    IOExample io;
    io.inputs.push_back(atoms(p, s.substr(0, cut)));
    io.output = atoms(p, s.substr(cut + 1));
    p.examples.push_back(io);
  }
  return p;
}

inline SolverConfig test_solver() {
  SolverConfig cfg = default_solver_config();
  cfg.timeout_ms = 10000;
  return cfg;
}

}  // namespace parachk::testing
