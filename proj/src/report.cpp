#include "regproj/report.hpp"

#include <memory>
#include <sstream>

#include "regproj/curve_catalog.hpp"
#include "regproj/decision.hpp"
#include "regproj/invariants.hpp"
#include "regproj/lift.hpp"

namespace regproj {

using nlohmann::json;

namespace {

json envelope(const std::string& command) {
  return json{{"format_version", kReportFormatVersion}, {"command", command}};
}

std::string census_text(const TypeCensus& c) {
  return "S=" + std::to_string(c.s) + " A=" + std::to_string(c.a) + " D=" + std::to_string(c.d);
}

json census_json(const TypeCensus& c) {
  return json{{"TypeS", c.s}, {"TypeA", c.a}, {"TypeD", c.d}};
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

Report parse_failure_report(const GpdError& e) {
  Report r;
  r.data = envelope("validate");
  r.data["valid"] = false;
  json ds = json::array();
  for (const auto& d : e.diagnostics()) {
    ds.push_back({{"kind", d.kind == Diagnostic::Kind::Syntax ? "syntax" : "semantic"},
                  {"code", d.code},
                  {"line", d.line},
                  {"column", d.column},
                  {"message", d.message}});
    r.text += d.to_string() + "\n";
  }
  r.data["diagnostics"] = ds;
  r.exit = e.syntax() ? ExitCode::Usage : ExitCode::Violation;
  return r;
}

Report validate_report(const GpdDocument& doc) {
  Report r;
  r.data = envelope("validate");
  const auto violations = validate(doc.projection);
  json vs = json::array();
  for (const auto& v : violations) {
    vs.push_back({{"kind", "semantic"}, {"code", v.code}, {"element", v.element}, {"message", v.detail}});
    r.text += "semantic error [" + v.code + "] " + v.element + ": " + v.detail + "\n";
  }
  r.data["valid"] = violations.empty();
  r.data["diagnostics"] = vs;
  r.data["crossing_number"] = doc.projection.crossing_number();
  if (violations.empty()) r.text = "valid: cr = " + std::to_string(doc.projection.crossing_number()) + "\n";
  r.exit = violations.empty() ? ExitCode::Ok : ExitCode::Violation;
  return r;
}

Report lifts_report(const GpdDocument& doc, int jobs) {
  const Projection& p = doc.projection;
  const bool in_range = p.crossing_number() <= 3;
  const bool planar = is_planar(p.graph());
  const auto verdicts = analyze_lifts(p, jobs);
  const auto shared = std::make_shared<const Projection>(p);
  const auto lifts = enumerate_lifts(shared);
  const auto cs = cycles(p.graph());
  const auto pairs = disjoint_cycle_pairs(cs);

  Report r;
  r.data = envelope("lifts");
  r.data["crossing_number"] = p.crossing_number();
  r.data["planar"] = planar;
  std::ostringstream text;
  text << "cr = " << p.crossing_number() << ", " << verdicts.size() << " lifts";
  if (!in_range) text << " (beyond cr 3: verdicts omitted)";
  text << "\n";
  json arr = json::array();
  int witnessed = 0;
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    const auto& v = verdicts[i];
    const auto parts = constituents(lifts[i], cs, pairs);
    json item{{"over_strand", v.bits}};
    json cons = json::array();
    std::vector<std::string> shown;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      cons.push_back({{"subgraph", parts[k].label}, {"class", v.classes[k].to_string()}});
      shown.push_back(parts[k].label + " " + v.classes[k].to_string());
    }
    item["constituents"] = cons;
    witnessed += !v.nontrivial.empty();
    text << "  " << v.bits << ": " << join(shown, ", ");
    if (in_range) {
      item["totally_free"] = v.totally_free;
      text << " | totally_free=" << yes_no(v.totally_free);
      if (planar) {
        item["trivial"] = v.trivial;
        text << " trivial=" << yes_no(v.trivial);
      }
    }
    text << "\n";
    arr.push_back(item);
  }
  r.data["lifts"] = arr;
  r.data["lifts_with_nontrivial_constituent"] = witnessed;
  text << "lifts with a Hopf or trefoil constituent: " << witnessed << "/" << verdicts.size() << "\n";
  r.text = text.str();
  return r;
}

Report invariants_report(const GpdDocument& doc, const std::string& bits) {
  const auto shared = std::make_shared<const Projection>(doc.projection);
  Lift f;
  if (!bits.empty()) f = lift_from_bits(shared, bits);
  else if (doc.over) f = Lift{shared, *doc.over};
  else f = lift_from_bits(shared, std::string(shared->crossing_number(), '0'));

  Report r;
  r.data = envelope("invariants");
  r.data["over_strand"] = f.bits();
  std::ostringstream text;
  text << "lift " << f.bits() << "\n";
  json arr = json::array();
  for (const auto& c : constituents(f)) {
    const LinkDiagram& d = c.diagram;
    const LinkClass k = classify_small_link(d);
    json item{{"subgraph", c.label},
              {"components", d.component_count},
              {"crossings", d.crossing_count()},
              {"writhe", writhe(d)},
              {"bracket", kauffman_bracket(d).to_string()},
              {"normalized_bracket", normalized_bracket(d).to_string()},
              {"tricolorings", tricolor_count(d)},
              {"class", k.to_string()}};
    text << "  " << c.label << ": crossings=" << d.crossing_count() << " writhe=" << writhe(d);
    if (d.component_count == 2) {
      item["linking_number"] = linking_number(d);
      text << " lk=" << linking_number(d);
    }
    text << " f=" << normalized_bracket(d).to_string() << " colorings=" << tricolor_count(d) << " class="
         << k.to_string() << "\n";
    arr.push_back(item);
  }
  r.data["constituents"] = arr;
  r.text = text.str();
  return r;
}

Report classify_report(const GpdDocument& doc) {
  const Projection& p = doc.projection;
  const auto types = double_point_types(p);
  const TypeCensus census = type_census(p);
  Report r;
  r.data = envelope("classify");
  r.data["crossing_number"] = p.crossing_number();
  std::ostringstream text;
  text << "cr = " << p.crossing_number() << " (" << census_text(census) << ")\n";
  json dps = json::array();
  for (int i = 0; i < p.crossing_number(); ++i) {
    const auto& d = p.double_points()[i];
    dps.push_back({{"name", d.name}, {"type", to_string(types[i])}});
    text << "  " << d.name << ": " << to_string(types[i]) << "\n";
  }
  r.data["double_points"] = dps;
  r.data["census"] = census_json(census);
  json cyc = json::array();
  for (const auto& gamma : cycles(p.graph())) {
    const Projection cp = restrict_projection(p, {gamma});
    json item{{"cycle", gamma.describe(p.graph())},
              {"self_crossings", cp.crossing_number()},
              {"interferency", interferency(p, gamma)},
              {"certificate", disk_certificate(p, gamma)}};
    std::string cls = "beyond catalog";
    if (cp.crossing_number() <= 3) {
      const SphericalCurveClass* c = find_class(standard_catalog(), cp);
      cls = c ? c->id : "unknown";
      item["curve_class"] = cls;
      item["trefoil_shadow"] = c && c->is_trefoil_shadow;
    }
    text << "  cycle " << gamma.describe(p.graph()) << ": class " << cls << ", self crossings "
         << cp.crossing_number() << ", interferency " << interferency(p, gamma) << ", certificate "
         << yes_no(disk_certificate(p, gamma)) << "\n";
    cyc.push_back(item);
  }
  r.data["cycles"] = cyc;
  r.text = text.str();
  return r;
}

Report decide_report(const GpdDocument& doc, int jobs) {
  Report r;
  r.data = envelope("decide-knotted");
  DecisionReport rep;
  try {
    rep = projection_knotted(doc.projection, jobs);
  } catch (const DecisionError& e) {
    r.data["refused"] = e.what();
    r.text = std::string("refused: ") + e.what() + "\n";
    r.exit = ExitCode::Usage;
    return r;
  }
  r.data["crossing_number"] = rep.crossing_number;
  json types = json::array();
  std::vector<std::string> shown;
  for (std::size_t i = 0; i < rep.types.size(); ++i) {
    types.push_back({{"name", doc.projection.double_points()[i].name}, {"type", to_string(rep.types[i])}});
    shown.push_back(doc.projection.double_points()[i].name + " " + to_string(rep.types[i]));
  }
  r.data["double_points"] = types;
  r.data["census"] = census_json(rep.census);
  r.data["knotted"] = rep.knotted;
  r.data["witness"] = rep.knotted ? json(nullptr) : json(rep.witness);
  json lifts = json::array();
  int hopf = 0;
  std::ostringstream body;
  for (const auto& v : rep.lifts) {
    json ev = json::array();
    std::vector<std::string> named;
    bool has_hopf = false;
    for (const auto& e : v.nontrivial) {
      ev.push_back({{"subgraph", e.subgraph}, {"class", e.link_class.to_string()}});
      named.push_back(e.subgraph + " " + e.link_class.to_string());
      has_hopf |= e.link_class.kind == LinkClass::Kind::Hopf;
    }
    hopf += has_hopf;
    lifts.push_back({{"over_strand", v.bits}, {"trivial", v.trivial}, {"totally_free", v.totally_free}, {"evidence", ev}});
    body << "  " << v.bits << ": " << (v.trivial ? "trivial" : join(named, ", ")) << "\n";
  }
  r.data["lifts"] = lifts;
  r.data["lifts_with_hopf"] = hopf;
  std::ostringstream text;
  text << "knotted: " << yes_no(rep.knotted) << "\n"
       << "cr = " << rep.crossing_number << " (" << census_text(rep.census) << ")";
  if (!shown.empty()) text << ": " << join(shown, ", ");
  text << "\n";
  if (!rep.knotted) text << "witness trivial lift: " << rep.witness << "\n";
  text << "lifts with a Hopf constituent: " << hopf << "/" << rep.lifts.size() << "\n" << body.str();
  r.text = text.str();
  return r;
}

Report catalog_report(int max_cr) {
  const CurveCatalog& full = standard_catalog();
  Report r;
  r.data = envelope("catalog");
  r.data["mirror_convention"] = full.mirrors == MirrorConvention::Identified ? "identified" : "distinct";
  r.data["max_cr"] = max_cr;
  json rows = json::array();
  std::ostringstream text;
  text << "id    cr  gauss   trefoil_shadow\n";
  int count = 0;
  for (const auto& c : full.classes) {
    if (c.crossing_number > max_cr) continue;
    ++count;
    rows.push_back({{"id", c.id},
                    {"crossing_number", c.crossing_number},
                    {"gauss_word", c.gauss_word},
                    {"code", c.code},
                    {"trefoil_shadow", c.is_trefoil_shadow}});
    std::string id = c.id, word = c.gauss_word.empty() ? "-" : c.gauss_word;
    id.resize(6, ' ');
    word.resize(8, ' ');
    text << id << c.crossing_number << "   " << word << yes_no(c.is_trefoil_shadow) << "\n";
  }
  r.data["classes"] = rows;
  text << count << " classes (mirror images " << r.data["mirror_convention"].get<std::string>() << ")\n";
  r.text = text.str();
  return r;
}

Report clauses_report(const std::vector<ClauseResult>& clauses) {
  Report r;
  r.data = envelope("verify-theorems");
  json arr = json::array();
  bool all = true;
  std::ostringstream text;
  for (const auto& c : clauses) {
    arr.push_back({{"id", c.id}, {"statement", c.statement}, {"passed", c.passed}, {"detail", c.detail}});
    text << (c.passed ? "PASS " : "FAIL ") << c.id << ": " << c.statement << " (" << c.detail << ")\n";
    all = all && c.passed;
  }
  r.data["clauses"] = arr;
  r.data["all_passed"] = all;
  r.text = text.str();
  r.exit = all ? ExitCode::Ok : ExitCode::Violation;
  return r;
}

}  // namespace regproj
