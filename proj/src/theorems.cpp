#include "regproj/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "regproj/curve_catalog.hpp"
#include "regproj/decision.hpp"
#include "regproj/gpd.hpp"
#include "regproj/invariants.hpp"
#include "regproj/lift.hpp"
#include "regproj/reidemeister.hpp"

namespace regproj {

namespace fs = std::filesystem;

const std::vector<Projection>& corpus_at(GraphFamily family, int cr) {
  static std::mutex mu;
  static std::map<std::pair<GraphFamily, int>, std::vector<Projection>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, fresh] = cache.try_emplace({family, cr});
  if (fresh) for_each_projection(family, cr, [&](const Projection& p) { it->second.push_back(p); });
  return it->second;
}

namespace {

const std::vector<GraphFamily> kConnected{GraphFamily::Circle, GraphFamily::Theta, GraphFamily::Handcuff,
                                          GraphFamily::K4};

// Runs fn(i) for i < n on `jobs` threads. fn returns an empty string on
// success; the failure with the smallest index is kept so reports do not
// depend on scheduling.
struct Failure {
  std::size_t index = SIZE_MAX;
  std::string message;
};

Failure parallel_check(std::size_t n, int jobs, const std::function<std::string(std::size_t)>& fn) {
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  Failure first;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      std::string msg;
      try {
        msg = fn(i);
      } catch (const std::exception& e) {
        msg = std::string("exception: ") + e.what();
      }
      if (msg.empty()) continue;
      std::lock_guard<std::mutex> lock(mu);
      if (i < first.index) first = {i, msg};
    }
  };
  const int workers = std::max(1, jobs);
  if (workers == 1) {
    worker();
    return first;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return first;
}

struct Item {
  GraphFamily family;
  const Projection* projection;
  std::size_t index;
};

std::vector<Item> corpus_items(const std::vector<GraphFamily>& families, int cr,
                               const std::function<bool(const Projection&)>& keep = {}) {
  std::vector<Item> items;
  for (GraphFamily f : families) {
    const auto& ps = corpus_at(f, cr);
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (!keep || keep(ps[i])) items.push_back({f, &ps[i], i});
  }
  return items;
}

std::string where(const Item& it) {
  return to_string(it.family) + " #" + std::to_string(it.index);
}

bool has_typed_point(const Projection& p) {
  const TypeCensus c = type_census(p);
  return c.s + c.a > 0;
}

ClauseResult finish(ClauseResult r, const Failure& f, const std::vector<Item>* items, const std::string& ok) {
  r.passed = f.index == SIZE_MAX;
  if (r.passed) r.detail = ok;
  else if (items) r.detail = where((*items)[f.index]) + ": " + f.message;
  else r.detail = f.message;
  return r;
}

std::vector<std::pair<std::string, GpdDocument>> load_fixtures(const std::string& dir) {
  std::vector<std::pair<std::string, GpdDocument>> out;
  std::vector<fs::path> paths;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".gpd") paths.push_back(e.path());
  std::sort(paths.begin(), paths.end());
  for (const auto& p : paths) out.emplace_back(p.filename().string(), load_gpd(p.string()));
  return out;
}

std::vector<LinkClass> unoriented_multiset(const LiftVerdict& v) {
  std::vector<LinkClass> m;
  for (const auto& k : v.classes) m.push_back(k.unoriented());
  std::sort(m.begin(), m.end());
  return m;
}

bool has_hopf(const LiftVerdict& v) {
  return std::any_of(v.nontrivial.begin(), v.nontrivial.end(),
                     [](const ConstituentEvidence& e) { return e.link_class.kind == LinkClass::Kind::Hopf; });
}

}  // namespace

ClauseResult check_cr1_trivial(const SuiteOptions& o) {
  ClauseResult r{"1", "cr = 1 projections are trivial", false, ""};
  const auto items = corpus_items(kConnected, 1);
  std::atomic<long> lifts{0};
  const Failure f = parallel_check(items.size(), o.jobs, [&](std::size_t i) -> std::string {
    const DecisionReport rep = projection_knotted(*items[i].projection);
    if (rep.knotted) return "knotted";
    for (const auto& v : rep.lifts)
      if (!v.trivial) return "lift " + v.bits + " not trivial";
    lifts += static_cast<long>(rep.lifts.size());
    return "";
  });
  return finish(r, f, &items,
                std::to_string(items.size()) + " projections, " + std::to_string(lifts.load()) + " lifts trivial");
}

ClauseResult check_cr2_not_knotted(const SuiteOptions& o) {
  ClauseResult r{"2", "cr = 2 projections are not knotted; with a Type-S/A point all lifts are trivial", false, ""};
  const auto items = corpus_items(all_families(), 2);
  std::atomic<long> typed{0};
  const Failure f = parallel_check(items.size(), o.jobs, [&](std::size_t i) -> std::string {
    const Projection& p = *items[i].projection;
    const DecisionReport rep = projection_knotted(p);
    if (rep.knotted) return "knotted";
    if (!has_typed_point(p)) return "";
    ++typed;
    for (const auto& v : rep.lifts)
      if (!v.trivial) return "lift " + v.bits + " not trivial";
    return "";
  });
  return finish(r, f, &items,
                std::to_string(items.size()) + " projections, " + std::to_string(typed.load()) +
                    " with a Type-S/A point");
}

ClauseResult check_cr3_typed_not_knotted(const SuiteOptions& o) {
  ClauseResult r{"3", "cr = 3 projections with a Type-S/A point are not knotted", false, ""};
  const auto items = corpus_items(all_families(), 3, has_typed_point);
  const Failure f = parallel_check(items.size(), o.jobs, [&](std::size_t i) -> std::string {
    return projection_knotted(*items[i].projection).knotted ? "knotted" : "";
  });
  return finish(r, f, &items, std::to_string(items.size()) + " projections");
}

ClauseResult check_knotted_fixture(const SuiteOptions& o) {
  ClauseResult r{"4", "cube fixture is knotted with three Type-D points and a Hopf link in every lift", false, ""};
  try {
    const Projection p = load_gpd(o.fixtures_dir + "/cube_knotted.gpd").projection;
    const DecisionReport rep = projection_knotted(p, o.jobs);
    std::ostringstream bad;
    if (rep.crossing_number != 3) bad << "cr=" << rep.crossing_number << "; ";
    if (!rep.knotted) bad << "not knotted (witness " << rep.witness << "); ";
    if (rep.census.d != 3) bad << "TypeD count " << rep.census.d << "; ";
    int hopf = 0;
    for (const auto& v : rep.lifts) hopf += has_hopf(v);
    if (hopf != 8 || rep.lifts.size() != 8) bad << hopf << "/" << rep.lifts.size() << " lifts with Hopf; ";
    r.passed = bad.str().empty();
    r.detail = r.passed ? "knotted, cr=3, 3 TypeD, 8/8 lifts with Hopf" : bad.str();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

ClauseResult check_nonplanar_fixture(const SuiteOptions& o) {
  ClauseResult r{"5", "non-planar fixture: no totally free lift, decision refuses", false, ""};
  try {
    const auto p = std::make_shared<const Projection>(load_gpd(o.fixtures_dir + "/nonplanar_pair.gpd").projection);
    std::ostringstream bad;
    if (is_planar(p->graph())) bad << "graph is planar; ";
    const auto verdicts = analyze_lifts(*p, o.jobs);
    const auto lifts = enumerate_lifts(p);
    int witnessed = 0;
    for (std::size_t i = 0; i < lifts.size(); ++i) {
      if (totally_free(lifts[i])) bad << "lift " << lifts[i].bits() << " totally free; ";
      witnessed += has_hopf(verdicts[i]);
    }
    if (lifts.size() != 4 || witnessed != 4) bad << witnessed << "/" << lifts.size() << " lifts with Hopf; ";
    std::string refusal = "none";
    try {
      projection_knotted(*p);
    } catch (const DecisionError& e) {
      refusal = e.what();
    }
    if (refusal != "planarity required") bad << "refusal: " << refusal << "; ";
    r.passed = bad.str().empty();
    r.detail = r.passed ? "4/4 lifts not totally free, each with Hopf; refused: planarity required" : bad.str();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

ClauseResult check_curve_catalog(const SuiteOptions&) {
  ClauseResult r{"6", "ten spherical curve classes with at most three double points", false, ""};
  try {
    const CurveCatalog cat = enumerate_classes(3, standard_catalog().mirrors);
    std::ostringstream bad;
    int shadows = 0;
    for (const auto& c : cat.classes) {
      shadows += c.is_trefoil_shadow;
      if (c.is_trefoil_shadow) continue;
      const auto p = std::make_shared<const Projection>(c.representative);
      const auto cs = cycles(p->graph());
      for (const auto& f : enumerate_lifts(p)) {
        const LinkClass k = classify_small_link(restrict(f, cs));
        if (k.kind != LinkClass::Kind::Unknot) bad << c.id << " lift " << f.bits() << " is " << k.to_string() << "; ";
      }
    }
    if (cat.classes.size() != 10) bad << cat.classes.size() << " classes; ";
    if (shadows != 1) bad << shadows << " trefoil shadows; ";
    r.passed = bad.str().empty();
    r.detail = r.passed ? "10 classes, 1 trefoil shadow, other lifts all Unknot" : bad.str();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

namespace {

struct Signature {
  LaurentPoly bracket;
  long long colorings = 0;
  int linking = 0;
  bool operator==(const Signature&) const = default;
};

Signature signature(const LinkDiagram& d) {
  return {normalized_bracket(d), tricolor_count(d), d.component_count == 2 ? linking_number(d) : 0};
}

std::vector<LinkDiagram> move_seeds(const SuiteOptions& o) {
  std::vector<LinkDiagram> seeds;
  auto add_lifts = [&](const Projection& q) {
    const auto p = std::make_shared<const Projection>(q);
    for (const auto& f : enumerate_lifts(p))
      for (const auto& c : constituents(f))
        if (c.diagram.crossing_count() <= o.max_diagram_cr) seeds.push_back(c.diagram);
  };
  for (const auto& c : standard_catalog().classes) add_lifts(c.representative);
  for (int cr = 0; cr <= 2; ++cr)
    for (const auto& q : corpus_at(GraphFamily::TwoUnknots, cr)) add_lifts(q);
  for (const auto& [name, doc] : load_fixtures(o.fixtures_dir)) add_lifts(doc.projection);
  return seeds;
}

}  // namespace

ClauseResult check_reidemeister_invariance(const SuiteOptions& o) {
  ClauseResult r{"7", "bracket, linking number and 3-colorings survive Reidemeister moves", false, ""};
  std::vector<LinkDiagram> seeds;
  try {
    seeds = move_seeds(o);
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
    return r;
  }
  std::atomic<long> moves{0};
  std::atomic<int> widest{0};
  std::mutex tally_mu;
  std::map<std::string, long> tally;
  const Failure f = parallel_check(static_cast<std::size_t>(o.sequences), o.jobs, [&](std::size_t i) -> std::string {
    std::mt19937_64 rng(o.seed * 1000003u + i);
    LinkDiagram d = seeds[rng() % seeds.size()];
    const Signature want = signature(d);
    const int length = 5 + static_cast<int>(rng() % 26);
    for (int step = 0; step < length; ++step) {
      std::string applied;
      d = random_move(d, rng, o.max_diagram_cr - 1, &applied);
      ++moves;
      {
        std::lock_guard<std::mutex> lock(tally_mu);
        ++tally[applied.substr(0, applied.find(' '))];
      }
      const int cr = d.crossing_count();
      for (int w = widest.load(); cr > w && !widest.compare_exchange_weak(w, cr);) {
      }
      if (cr > o.max_diagram_cr) return "step " + std::to_string(step) + " reached " + std::to_string(cr) + " crossings";
      if (!(signature(d) == want)) return "sequence " + std::to_string(i) + " step " + std::to_string(step) + " (" + applied + ")";
    }
    return "";
  });
  std::string kinds;
  for (const auto& [name, count] : tally) kinds += " " + name + "=" + std::to_string(count);
  if (f.index == SIZE_MAX && (!tally.count("R1+") || !tally.count("R1-") || !tally.count("R2+") ||
                              !tally.count("R2-") || !tally.count("R3")))
    return finish(r, {0, "some move kind never applied:" + kinds}, nullptr, "");
  return finish(r, f, nullptr,
                std::to_string(o.sequences) + " sequences, seed " + std::to_string(o.seed) + ", max " +
                    std::to_string(widest.load()) + " crossings, moves" + kinds);
}

ClauseResult check_small_link_completeness(const SuiteOptions& o) {
  ClauseResult r{"8", "every diagram with at most three crossings is classified", false, ""};
  std::vector<Item> items;
  for (const auto& c : standard_catalog().classes) items.push_back({GraphFamily::Circle, &c.representative, 0});
  const std::size_t shadows = items.size();
  for (GraphFamily fam : {GraphFamily::TwoUnknots, GraphFamily::Handcuff})
    for (int cr = 0; cr <= 3; ++cr) {
      const auto& ps = corpus_at(fam, cr);
      for (std::size_t i = 0; i < ps.size(); ++i) items.push_back({fam, &ps[i], i});
    }
  std::atomic<long> diagrams{0};
  const Failure f = parallel_check(items.size(), o.jobs, [&](std::size_t i) -> std::string {
    const auto p = std::make_shared<const Projection>(*items[i].projection);
    for (const auto& lift : enumerate_lifts(p))
      for (const auto& c : constituents(lift)) {
        if (c.diagram.crossing_count() > 3) continue;
        ++diagrams;
        const LinkClass k = classify_small_link(c.diagram);
        const bool ok = c.diagram.component_count == 1
                            ? k.kind == LinkClass::Kind::Unknot || k.kind == LinkClass::Kind::Trefoil
                            : k.kind == LinkClass::Kind::Unlink || k.kind == LinkClass::Kind::Hopf ||
                                  k.kind == LinkClass::Kind::Trefoil;
        if (!ok) return c.label + " lift " + lift.bits() + " -> " + k.to_string();
      }
    return "";
  });
  if (f.index != SIZE_MAX && f.index < shadows) {
    r.detail = "shadow " + standard_catalog().classes[f.index].id + ": " + f.message;
    return r;
  }
  return finish(r, f, &items, std::to_string(diagrams.load()) + " diagrams classified");
}

ClauseResult check_disk_certificate(const SuiteOptions& o) {
  ClauseResult r{"9", "cycles with a disk certificate restrict to the unknot in every lift", false, ""};
  std::vector<Item> items;
  for (GraphFamily fam : all_families())
    for (int cr = 0; cr <= 3; ++cr) {
      const auto& ps = corpus_at(fam, cr);
      for (std::size_t i = 0; i < ps.size(); ++i) items.push_back({fam, &ps[i], i});
    }
  std::atomic<long> certified{0};
  const Failure f = parallel_check(items.size(), o.jobs, [&](std::size_t i) -> std::string {
    const auto p = std::make_shared<const Projection>(*items[i].projection);
    const auto lifts = enumerate_lifts(p);
    for (const auto& gamma : cycles(p->graph())) {
      if (!disk_certificate(*p, gamma)) continue;
      ++certified;
      for (const auto& lift : lifts) {
        const LinkClass k = classify_small_link(restrict(lift, {gamma}));
        if (k.kind != LinkClass::Kind::Unknot)
          return gamma.describe(p->graph()) + " lift " + lift.bits() + " -> " + k.to_string();
      }
    }
    return "";
  });
  return finish(r, f, &items, std::to_string(certified.load()) + " certified (projection, cycle) pairs");
}

ClauseResult check_smoothing_containment(const SuiteOptions& o) {
  ClauseResult r{"10", "smoothing a Type-A point keeps lift classes within the original's", false, ""};
  const auto items = corpus_items(all_families(), 3, [](const Projection& p) { return type_census(p).a > 0; });
  std::atomic<long> smoothings{0};
  const Failure f = parallel_check(items.size(), o.jobs, [&](std::size_t i) -> std::string {
    const Projection& p = *items[i].projection;
    std::set<std::vector<LinkClass>> original;
    for (const auto& v : analyze_lifts(p)) original.insert(unoriented_multiset(v));
    const auto types = double_point_types(p);
    for (int d = 0; d < p.crossing_number(); ++d) {
      if (types[d] != DoublePointType::TypeA) continue;
      const Projection psi = smooth_type_a(p, d);
      ++smoothings;
      if (psi.crossing_number() != 2) return "smoothing " + p.double_points()[d].name + " left cr=" + std::to_string(psi.crossing_number());
      for (const auto& v : analyze_lifts(psi))
        if (!original.count(unoriented_multiset(v)))
          return "smoothing " + p.double_points()[d].name + " lift " + v.bits + " has a new class multiset";
    }
    return "";
  });
  return finish(r, f, &items,
                std::to_string(items.size()) + " projections, " + std::to_string(smoothings.load()) + " smoothings");
}

ClauseResult check_census(const SuiteOptions& o) {
  ClauseResult r{"census", "Type-S, Type-A and Type-D counts sum to cr", false, ""};
  std::vector<Item> items;
  for (GraphFamily fam : all_families())
    for (int cr = 0; cr <= 3; ++cr) {
      const auto& ps = corpus_at(fam, cr);
      for (std::size_t i = 0; i < ps.size(); ++i) items.push_back({fam, &ps[i], i});
    }
  const Failure f = parallel_check(items.size(), o.jobs, [&](std::size_t i) -> std::string {
    const Projection& p = *items[i].projection;
    const TypeCensus c = type_census(p);
    return c.s + c.a + c.d == p.crossing_number() ? "" : "census mismatch";
  });
  return finish(r, f, &items, std::to_string(items.size()) + " projections");
}

ClauseResult check_knotted_all_type_d(const SuiteOptions& o) {
  ClauseResult r{"type-d", "knotted cr = 3 projections have only Type-D points", false, ""};
  std::vector<Projection> subjects;
  try {
    for (const auto& [name, doc] : load_fixtures(o.fixtures_dir)) {
      const Projection& p = doc.projection;
      if (p.crossing_number() == 3 && is_planar(p.graph())) subjects.push_back(p);
    }
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
    return r;
  }
  for (GraphFamily fam : all_families())
    for (const auto& p : corpus_at(fam, 3)) subjects.push_back(p);
  std::atomic<long> knotted{0};
  const Failure f = parallel_check(subjects.size(), o.jobs, [&](std::size_t i) -> std::string {
    const DecisionReport rep = projection_knotted(subjects[i]);
    if (!rep.knotted) return "";
    ++knotted;
    return rep.census.d == 3 ? "" : "knotted with a Type-S/A point";
  });
  return finish(r, f, nullptr,
                std::to_string(subjects.size()) + " projections, " + std::to_string(knotted.load()) + " knotted");
}

ClauseResult check_fixture_suite(const SuiteOptions& o) {
  ClauseResult r{"fixtures", "fixtures validate and corrupted variants are rejected", false, ""};
  std::ostringstream bad;
  int good = 0, rejected = 0;
  try {
    for (const auto& [name, doc] : load_fixtures(o.fixtures_dir)) {
      if (validate(doc.projection).empty()) ++good;
      else bad << name << " invalid; ";
    }
    std::ifstream manifest(o.fixtures_dir + "/corrupt/expected.txt");
    if (!manifest) bad << "missing corrupt/expected.txt; ";
    std::string line;
    while (std::getline(manifest, line)) {
      std::istringstream in(line);
      std::string file, kind, code, word;
      if (!(in >> file >> kind)) continue;
      while (in >> word) code += (code.empty() ? "" : " ") + word;
      std::string got_kind = "accepted", got_code;
      try {
        const auto doc = load_gpd(o.fixtures_dir + "/corrupt/" + file);
        const auto vs = validate(doc.projection);
        if (!vs.empty()) got_kind = "semantic", got_code = vs.front().code;
      } catch (const GpdError& e) {
        got_kind = e.syntax() ? "syntax" : "semantic";
        got_code = e.diagnostics().front().code;
      }
      if (got_kind == kind && got_code == code) ++rejected;
      else bad << file << ": " << got_kind << " " << got_code << "; ";
    }
  } catch (const std::exception& e) {
    bad << "exception: " << e.what();
  }
  r.passed = bad.str().empty() && good > 0 && rejected > 0;
  r.detail = r.passed ? std::to_string(good) + " valid, " + std::to_string(rejected) + " rejected as expected"
                      : bad.str();
  return r;
}

std::vector<ClauseResult> acceptance_criteria(const SuiteOptions& o) {
  return {check_cr1_trivial(o),           check_cr2_not_knotted(o),
          check_cr3_typed_not_knotted(o), check_knotted_fixture(o),
          check_nonplanar_fixture(o),     check_curve_catalog(o),
          check_reidemeister_invariance(o), check_small_link_completeness(o),
          check_disk_certificate(o),      check_smoothing_containment(o)};
}

std::vector<ClauseResult> theorem_clauses(const SuiteOptions& o) {
  auto out = acceptance_criteria(o);
  out.push_back(check_census(o));
  out.push_back(check_knotted_all_type_d(o));
  out.push_back(check_fixture_suite(o));
  return out;
}

}  // namespace regproj
