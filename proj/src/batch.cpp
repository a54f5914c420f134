#include "parachk/batch.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace parachk {

namespace {

BatchItem run_one(const Problem& p, const SolverConfig& cfg) {
  BatchItem item;
  try {
    item.result = check(p, cfg);
  } catch (const std::exception& e) {
    item.error = e.what();
  }
  return item;
}

}  // namespace

std::vector<BatchItem> check_batch(const std::vector<Problem>& problems, const SolverConfig& cfg, int threads) {
  std::vector<BatchItem> out(problems.size());
  const long n = static_cast<long>(problems.size());
#ifdef _OPENMP
  if (threads <= 0) threads = omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#else
  (void)threads;
#endif
  for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = run_one(problems[static_cast<std::size_t>(i)], cfg);
  return out;
}

std::vector<BatchItem> check_batch_serial(const std::vector<Problem>& problems, const SolverConfig& cfg) {
  std::vector<BatchItem> out;
  out.reserve(problems.size());
  for (const auto& p : problems) out.push_back(run_one(p, cfg));
  return out;
}

}  // namespace parachk
