#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "regproj/corpus.hpp"
#include "regproj/projection.hpp"

namespace regproj {

struct ClauseResult {
  std::string id;
  std::string statement;
  bool passed = false;
  std::string detail;
};

struct SuiteOptions {
  std::string fixtures_dir;  // directory holding the .gpd fixtures
  int jobs = 1;
  std::uint64_t seed = 1;
  int sequences = 500;       // randomized move sequences
  int max_diagram_cr = 6;
};

// Exact-cr corpus, generated once per process and shared between callers.
const std::vector<Projection>& corpus_at(GraphFamily family, int cr);

ClauseResult check_cr1_trivial(const SuiteOptions& o);
ClauseResult check_cr2_not_knotted(const SuiteOptions& o);
ClauseResult check_cr3_typed_not_knotted(const SuiteOptions& o);
ClauseResult check_knotted_fixture(const SuiteOptions& o);
ClauseResult check_nonplanar_fixture(const SuiteOptions& o);
ClauseResult check_curve_catalog(const SuiteOptions& o);
ClauseResult check_reidemeister_invariance(const SuiteOptions& o);
ClauseResult check_small_link_completeness(const SuiteOptions& o);
ClauseResult check_disk_certificate(const SuiteOptions& o);
ClauseResult check_smoothing_containment(const SuiteOptions& o);

// Census sums and the all-TypeD property of knotted cr = 3 projections.
ClauseResult check_census(const SuiteOptions& o);
ClauseResult check_knotted_all_type_d(const SuiteOptions& o);
// Every shipped fixture validates; every corrupted one fails as listed.
ClauseResult check_fixture_suite(const SuiteOptions& o);

// Criteria 1..10 in order.
std::vector<ClauseResult> acceptance_criteria(const SuiteOptions& o);
// The criteria followed by the supplementary clauses.
std::vector<ClauseResult> theorem_clauses(const SuiteOptions& o);

}  // namespace regproj
