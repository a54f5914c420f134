#pragma once

// Many independent checks at once. check_batch spreads them over OpenMP
// threads (each check owns its solver process); check_batch_serial is the
// reference it is tested against.

#include <optional>
#include <string>
#include <vector>

#include "parachk/check.hpp"

namespace parachk {

struct BatchItem {
  std::optional<CheckResult> result;
  std::string error;  // set when the check threw
};

std::vector<BatchItem> check_batch(const std::vector<Problem>& problems, const SolverConfig& cfg,
                                   int threads = 0);
std::vector<BatchItem> check_batch_serial(const std::vector<Problem>& problems, const SolverConfig& cfg);

}  // namespace parachk
