#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "regproj/report.hpp"

using namespace regproj;

namespace {

struct Options {
  std::string format = "text";
  int max_cr = 3;
  int jobs = 0;
  std::uint64_t seed = 1;
  int sequences = 500;
  std::string file;
  std::string lift;
  std::string fixtures = std::string(REGPROJ_DATA_DIR) + "/fixtures";
};

int emit(const Report& r, const Options& o) {
  if (o.format == "json") std::cout << r.data.dump(2) << "\n";
  else std::cout << r.text;
  return static_cast<int>(r.exit);
}

int with_document(const Options& o, const std::function<Report(const GpdDocument&)>& build) {
  GpdDocument doc;
  try {
    doc = load_gpd(o.file);
  } catch (const GpdError& e) {
    const Report r = parse_failure_report(e);
    emit(r, o);
    return static_cast<int>(ExitCode::Usage);
  }
  const auto violations = validate(doc.projection);
  if (!violations.empty()) return emit(validate_report(doc), o);
  return emit(build(doc), o);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Regular projections of spatial graphs with few double points"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-cr", o.max_cr, "Largest crossing number for catalog output")->check(CLI::Range(0, 3));
  app.add_option("--jobs", o.jobs, "Worker threads (0: hardware concurrency)")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", o.seed, "Seed for randomized move sequences");

  auto file_command = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "GPD document")->required();
    return sub;
  };
  auto* validate_cmd = file_command("validate", "Check a document and print diagnostics");
  auto* lifts_cmd = file_command("lifts", "List every lift with its constituent classes");
  auto* invariants_cmd = file_command("invariants", "Invariants of each constituent of one lift");
  invariants_cmd->add_option("--lift", o.lift, "Over-strand bits, one per double point");
  auto* classify_cmd = file_command("classify", "Double point types and curve class per cycle");
  auto* decide_cmd = file_command("decide-knotted", "Decide whether the projection is knotted");
  auto* catalog_cmd = app.add_subcommand("catalog", "Spherical curves with at most max-cr double points");
  auto* verify_cmd = app.add_subcommand("verify-theorems", "Replay the theorem clauses over the corpus");
  verify_cmd->add_option("--fixtures", o.fixtures, "Fixture directory");
  verify_cmd->add_option("--sequences", o.sequences, "Randomized move sequences")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::Usage);
  }
  const int jobs = o.jobs > 0 ? o.jobs : std::max(1u, std::thread::hardware_concurrency());

  try {
    if (validate_cmd->parsed()) {
      try {
        return emit(validate_report(load_gpd(o.file)), o);
      } catch (const GpdError& e) {
        return emit(parse_failure_report(e), o);
      }
    }
    if (lifts_cmd->parsed()) return with_document(o, [&](const GpdDocument& d) { return lifts_report(d, jobs); });
    if (invariants_cmd->parsed())
      return with_document(o, [&](const GpdDocument& d) { return invariants_report(d, o.lift); });
    if (classify_cmd->parsed()) return with_document(o, [&](const GpdDocument& d) { return classify_report(d); });
    if (decide_cmd->parsed()) return with_document(o, [&](const GpdDocument& d) { return decide_report(d, jobs); });
    if (catalog_cmd->parsed()) return emit(catalog_report(o.max_cr), o);
    if (verify_cmd->parsed()) {
      SuiteOptions s;
      s.fixtures_dir = o.fixtures;
      s.jobs = jobs;
      s.seed = o.seed;
      s.sequences = o.sequences;
      return emit(clauses_report(theorem_clauses(s)), o);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Usage);
  }
  return static_cast<int>(ExitCode::Usage);
}
