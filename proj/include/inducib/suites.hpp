#pragma once

// Named verification suites used by `verify <suite>` and `report`.

#include <cstdint>
#include <string>
#include <vector>

#include "inducib/report.hpp"

namespace inducib {

struct SuiteOptions {
  std::uint64_t seed = 1;
  int threads = 1;
};

/// ratio, h, H, prepare, stability, shift, adjustment, meanvalue, section6.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument for
/// an unknown name.
std::vector<CheckRecord> run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace inducib
