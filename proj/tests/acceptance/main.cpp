#include <cstdio>
#include <cstdlib>
#include <string>

#include "qnb/verify.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 7;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  std::printf("acceptance battery, seed %llu\n", static_cast<unsigned long long>(seed));
  int failed = 0;
  qnb::run_acceptance(seed, [&](const qnb::CriterionResult& r) {
    std::printf("[%s] criterion %d: %s (%zu checks, %zu failures, %.2fs)\n", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.checks, r.failures, r.seconds);
    for (const auto& d : r.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  });
  std::printf("%d of 9 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
