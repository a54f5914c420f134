// parachk: decide whether a polymorphic function is realizable from a
// sketch and examples.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "parachk/bench.hpp"
#include "parachk/check.hpp"
#include "parachk/error.hpp"
#include "parachk/oracle.hpp"
#include "parachk/witness.hpp"

using namespace parachk;
using nlohmann::ordered_json;

namespace {

enum Exit { kRealizable = 0, kUnrealizable = 1, kUnknown = 2, kError = 3, kDisagree = 4 };

int exit_code(const Verdict& v) {
  switch (kind_of(v)) {
    case VerdictKind::Realizable: return kRealizable;
    case VerdictKind::Unrealizable: return kUnrealizable;
    case VerdictKind::Unknown: return kUnknown;
  }
  return kError;
}

struct SolverFlags {
  std::optional<std::string> solver;
  std::optional<int> timeout_ms;

  void attach(CLI::App* cmd) {
    cmd->add_option("--solver", solver, "solver command line, read from stdin (default: $PARACHK_SOLVER or 'z3 -in')");
    cmd->add_option("--timeout", timeout_ms, "per-check time limit in milliseconds")->check(CLI::PositiveNumber);
  }

  SolverConfig config(const Problem* p) const {
    SolverConfig cfg = default_solver_config();
    if (p) cfg = resolve_config(*p, cfg);
    if (solver) cfg.command = *solver;
    if (timeout_ms) cfg.timeout_ms = *timeout_ms;
    return cfg;
  }
};

std::string reason_of(const Verdict& v) {
  if (const auto* u = std::get_if<Unrealizable>(&v)) return u->reason;
  if (const auto* u = std::get_if<Unknown>(&v)) return u->detail;
  return "";
}

ordered_json witness_json(const WitnessSummary& w, const ConstraintSet& cs) {
  auto key = [](const InputShape& in) {
    ordered_json a = ordered_json::array();
    for (const auto& s : in) a.push_back(s.str());
    return a;
  };
  ordered_json shapes = ordered_json::array();
  for (const auto& [in, out] : w.shape_table) shapes.push_back({{"input", key(in)}, {"output", out.str()}});
  ordered_json positions = ordered_json::array();
  for (const auto& [in, ps] : w.position_table) positions.push_back({{"input", key(in)}, {"sources", ps}});
  ordered_json inter = ordered_json::object();
  for (const auto& [k, e] : w.intermediates) inter["y" + std::to_string(k)] = from_extension(e).str(&cs.atoms);
  return {{"shapes", shapes}, {"positions", positions}, {"intermediates", inter}};
}

void print_verdict(const std::string& name, const Verdict& v, const ConstraintSet& cs, double ms,
                   bool witness, const std::string& format, const std::string& engine) {
  const auto* real = std::get_if<Realizable>(&v);
  if (format == "json") {
    ordered_json doc{{"problem", name}, {"engine", engine}, {"verdict", describe(v)}};
    if (!real) doc["reason"] = reason_of(v);
    doc["elapsed_ms"] = ms;
    if (witness && real) doc["witness"] = witness_json(real->witness, cs);
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::cout << "problem: " << name << "\n"
            << "verdict: " << describe(v) << "\n";
  if (!real) std::cout << "reason:  " << reason_of(v) << "\n";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", ms);
  std::cout << "time:    " << buf << " ms (" << engine << ")\n";
  if (witness && real) std::cout << format_witness(real->witness, cs);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Realizability checker for polymorphic functions given by a sketch and examples"};
  app.require_subcommand(1);

  std::string path, format = "table";
  bool witness = false;

  SolverFlags check_flags;
  auto* check_cmd = app.add_subcommand("check", "decide realizability with the SMT solver");
  check_cmd->add_option("problem", path, "problem file (JSON)")->required();
  check_cmd->add_flag("--witness", witness, "print the witness morphism when realizable");
  check_cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json"}));
  check_flags.attach(check_cmd);

  bool small_model = false, no_hints = false;
  auto* emit_cmd = app.add_subcommand("emit-smt", "print the SMT-LIB2 script sent to the solver");
  emit_cmd->add_option("problem", path, "problem file (JSON)")->required();
  emit_cmd->add_flag("--small-model", small_model, "the bounded first-pass script instead");
  emit_cmd->add_flag("--no-hints", no_hints, "omit ground instances of quantified constraints");

  bool cross_check = false;
  SolverFlags oracle_flags;
  auto* oracle_cmd = app.add_subcommand("oracle", "decide a shape-complete problem by exhaustive search");
  oracle_cmd->add_option("problem", path, "problem file (JSON)")->required();
  oracle_cmd->add_flag("--cross-check", cross_check, "also run the solver; exit 4 if the verdicts differ");
  oracle_cmd->add_flag("--witness", witness, "print the witness morphism when realizable");
  oracle_cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json"}));
  oracle_flags.attach(oracle_cmd);

  BenchOptions bench;
  SolverFlags bench_flags;
  auto* bench_cmd = app.add_subcommand("bench", "run the embedded fold benchmark");
  bench_cmd->add_option("--repeat", bench.repeat, "runs to average per instance")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--only", bench.only, "restrict to the named functions");
  bench_cmd->add_flag("--parallel", bench.parallel, "run instances concurrently");
  bench_cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json"}));
  bench_flags.attach(bench_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kError;
  }

  try {
    if (*check_cmd) {
      Problem p = load_problem(path);
      CheckResult r = check(p, check_flags.config(&p));
      print_verdict(p.name, r.verdict, r.constraints, r.elapsed_ms, witness, format,
                    r.fast_path ? "propagation" : "smt");
      return exit_code(r.verdict);
    }
    if (*emit_cmd) {
      Problem p = load_problem(path);
      EncodeOptions opts;
      opts.instantiation_hints = !no_hints;
      if (small_model) {
        validate_problem(p);
        opts.intermediate_bound = small_model_bound(propagate(p));
      }
      std::cout << emit_smt(p, opts).text();
      return 0;
    }
    if (*oracle_cmd) {
      Problem p = load_problem(path);
      const auto start = std::chrono::steady_clock::now();
      Verdict v = oracle(p);
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      ConstraintSet cs = propagate(p);
      print_verdict(p.name, v, cs, ms, witness, format, "oracle");
      if (!cross_check) return exit_code(v);
      CheckResult r = check(p, oracle_flags.config(&p));
      print_verdict(p.name, r.verdict, r.constraints, r.elapsed_ms, false, format,
                    r.fast_path ? "propagation" : "smt");
      if (kind_of(v) != kind_of(r.verdict)) {
        std::cerr << "disagreement: oracle says " << describe(v) << ", solver says " << describe(r.verdict) << "\n";
        return kDisagree;
      }
      return exit_code(v);
    }
    if (*bench_cmd) {
      bench.solver = bench_flags.config(nullptr);
      BenchReport report = run_bench(bench);
      std::cout << (format == "json" ? format_json(report) : format_table(report));
      return report.passed() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
