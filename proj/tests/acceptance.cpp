// Runs the seven acceptance criteria and prints one PASS/FAIL line for each.
// Every criterion is exact (integer comparisons); the only pinned numbers are
// the trial budget and the seed.
#include <algorithm>
#include <cstdio>
#include <thread>

#include "wvmaps/verify.hpp"

int main() {
  wvmaps::VerifyOptions opts;
  opts.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  opts.reroute_trials = 1000;
  opts.seed = 20240613;
  wvmaps::VerifyReport report = wvmaps::run_verification(opts);

  for (const auto& c : report.criteria) {
    long instances = 0;
    for (auto& [tag, n] : c.instances) instances += n;
    std::printf("criterion %d: %s  %s  (%ld checks, %zu violations, %.1fs)\n", c.id, c.pass ? "PASS" : "FAIL",
                c.title.c_str(), instances, c.violations.size(), c.seconds);
    std::size_t shown = 0;
    for (auto& v : c.violations) {
      if (++shown > 10) {
        std::printf("    ... %zu more\n", c.violations.size() - 10);
        break;
      }
      std::printf("    %s %s: %s\n", v.fixture.c_str(), v.tag.c_str(), v.detail.c_str());
    }
    for (auto& n : c.notes) std::printf("    note: %s\n", n.c_str());
  }
  std::fflush(stdout);
  return report.pass() ? 0 : 1;
}
