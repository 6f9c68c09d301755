#include <chrono>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "regproj/theorems.hpp"

using namespace regproj;

namespace {

struct Criterion {
  const char* label;
  double budget_seconds;
  ClauseResult (*run)(const SuiteOptions&);
};

}  // namespace

int main(int argc, char** argv) {
  SuiteOptions o;
  o.fixtures_dir = std::string(REGPROJ_DATA_DIR) + "/fixtures";
  o.seed = 20240601;
  o.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  CLI::App app{"Acceptance criteria"};
  app.add_option("--fixtures", o.fixtures_dir);
  app.add_option("--jobs", o.jobs);
  app.add_option("--seed", o.seed);
  CLI11_PARSE(app, argc, argv);

  const Criterion criteria[] = {
      {"cr=1 corpus: every lift trivial, nothing knotted", 5, check_cr1_trivial},
      {"cr=2 corpus: nothing knotted, Type-S/A projections have 4 trivial lifts", 30, check_cr2_not_knotted},
      {"cr=3 corpus with a Type-S/A point: nothing knotted", 300, check_cr3_typed_not_knotted},
      {"cube fixture: knotted, 3 TypeD, 8/8 lifts with Hopf", 1, check_knotted_fixture},
      {"non-planar fixture: 4/4 lifts not totally free, decision refused", 1, check_nonplanar_fixture},
      {"curve catalog: 10 classes, 1 trefoil shadow, rest Unknot", 10, check_curve_catalog},
      {"Reidemeister invariance: 500 seeded sequences, <=6 crossings", 30, check_reidemeister_invariance},
      {"small-link completeness at <=3 crossings", 30, check_small_link_completeness},
      {"disk certificate implies Unknot restriction", 60, check_disk_certificate},
      {"Type-A smoothing: lift class multisets contained", 120, check_smoothing_containment},
  };
  int failed = 0;
  int n = 0;
  for (const auto& c : criteria) {
    ++n;
    const auto start = std::chrono::steady_clock::now();
    const ClauseResult r = c.run(o);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = r.passed && secs <= c.budget_seconds;
    failed += !ok;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << n << " " << c.label << ": " << r.detail;
    std::cout << " [" << std::fixed;
    std::cout.precision(2);
    std::cout << secs << " s, budget " << c.budget_seconds << " s]";
    if (r.passed && !ok) std::cout << " over budget";
    std::cout << "\n";
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << (n - failed) << "/" << n << "\n";
  return failed ? 1 : 0;
}
