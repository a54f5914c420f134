// Times the OpenMP batch checker against its serial reference on the
// embedded corpus (SC and SI sets) and reports whether verdicts agree.

#include <chrono>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "parachk/batch.hpp"
#include "parachk/corpus.hpp"

using namespace parachk;

int main(int argc, char** argv) {
  CLI::App app{"parallel vs serial batch timing"};
  SolverConfig cfg = default_solver_config();
  int threads = 0;
  int repeat = 1;
  app.add_option("--solver", cfg.command, "solver command");
  app.add_option("--timeout", cfg.timeout_ms, "per-check timeout in ms");
  app.add_option("--threads", threads, "OpenMP threads (0: runtime default)");
  app.add_option("--repeat", repeat, "rounds per mode")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  std::vector<Problem> problems;
  for (const auto& e : benchmark_corpus()) {
    problems.push_back(e.sc);
    problems.push_back(e.si);
  }

  auto timed = [&](auto&& run) {
    double best = 0;
    std::vector<BatchItem> items;
    for (int r = 0; r < repeat; ++r) {
      auto start = std::chrono::steady_clock::now();
      items = run();
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      if (r == 0 || ms < best) best = ms;
    }
    return std::pair{best, items};
  };
  auto [serial_ms, serial] = timed([&] { return check_batch_serial(problems, cfg); });
  auto [parallel_ms, parallel] = timed([&] { return check_batch(problems, cfg, threads); });

  int agree = 0;
  for (std::size_t i = 0; i < problems.size(); ++i) {
    bool same = serial[i].result.has_value() == parallel[i].result.has_value();
    if (same && serial[i].result)
      same = kind_of(serial[i].result->verdict) == kind_of(parallel[i].result->verdict);
    agree += same;
  }

  nlohmann::json out = {{"instances", problems.size()},
                        {"repeat", repeat},
                        {"serial_ms", serial_ms},
                        {"parallel_ms", parallel_ms},
                        {"speedup", parallel_ms > 0 ? serial_ms / parallel_ms : 0.0},
                        {"agree", agree}};
  std::cout << out.dump(2) << "\n";
  return agree == static_cast<int>(problems.size()) ? 0 : 1;
}
