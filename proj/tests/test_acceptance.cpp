// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <cstdlib>
#include <iostream>

#include "jetci/acceptance.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20240611;
  std::cout << "acceptance seed " << seed << "\n";
  bool ok = true;
  for (const auto& r : jetci::run_acceptance(seed)) {
    std::cout << jetci::format_result(r) << "\n";
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}
