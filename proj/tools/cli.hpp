#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace qinv::cli {

/// Parses argv, dispatches one command and writes a single JSON document to
/// `out`. Returns 0 on success, 1 on a structured error, 2 when a verify
/// suite fails.
int run(int argc, const char* const* argv, std::ostream& out);

struct SuiteOptions {
  int k = 3;
  int trials = 20;
  std::uint64_t seed = 0;
};

/// Runs one verification suite; the report's "items" are sorted by name.
nlohmann::json run_suite(const std::string& suite, const SuiteOptions& options);

}  // namespace qinv::cli
