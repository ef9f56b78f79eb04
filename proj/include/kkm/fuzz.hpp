#pragma once

#include "kkm/theorems.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kkm {

struct FuzzSummary {
  std::string family;
  long instances = 0;
  long verified = 0;
  long hypothesis_failures = 0;
  long alarms = 0;
  std::vector<std::string> alarm_details;  // "instance <i> seed <s>: <note>"
};

/// Families: sperner, degbound, polytope, bloch, kkm, gkkm, gsperner, tucker.
const std::vector<std::string>& fuzz_families();

/// Instance i of a family runs with seed split_seed(seed, i).
TheoremReport fuzz_instance(const std::string& family, std::uint64_t instance_seed);

/// Runs `count` instances, optionally on several threads; the summary does
/// not depend on the thread count.
FuzzSummary run_fuzz(const std::string& family, long count, std::uint64_t seed, unsigned threads = 1);

}  // namespace kkm
