#pragma once

// End-to-end checks of every computation, one entry per criterion. Shared by
// the acceptance test binary and `jetci selftest`.

#include <cstdint>
#include <string>
#include <vector>

namespace jetci {

struct AcceptanceResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  // 0 means no runtime limit
};

/// Runs criteria 1..10 in order (or only `only` when nonzero).
std::vector<AcceptanceResult> run_acceptance(std::uint64_t seed, int only = 0);

/// "PASS [1] name (0.12 s / limit 10 s): detail"
std::string format_result(const AcceptanceResult& r);

}  // namespace jetci
