#include "regproj/gpd.hpp"

#include <fstream>
#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace regproj {

std::string Diagnostic::to_string() const {
  return std::to_string(line) + ":" + std::to_string(column) + ": " +
         (kind == Kind::Syntax ? "syntax error" : "semantic error") + " [" + code + "] " + message;
}

namespace {

std::string summarize(const std::vector<Diagnostic>& ds) {
  return ds.empty() ? std::string("invalid document") : ds.front().to_string();
}

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '+')) return false;
  return true;
}

struct Located {
  std::string text;
  int line, column;
};

struct RawDoublePoint {
  Located name;
  std::array<Located, 2> passages;
  std::vector<Located> darts;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  GpdDocument run() {
    read();
    return build();
  }

 private:
  [[noreturn]] void syntax(int line, int column, const std::string& code, const std::string& message) {
    throw GpdError({{Diagnostic::Kind::Syntax, code, line, column, message}});
  }

  void semantic(const Located& at, const std::string& code, const std::string& message) {
    semantic_.push_back({Diagnostic::Kind::Semantic, code, at.line, at.column, message});
  }

  void read() {
    std::istringstream in(text_);
    std::string line;
    int number = 0;
    bool header = false;
    std::string section;
    while (std::getline(in, line)) {
      ++number;
      const auto tokens = tokenize(line);
      if (tokens.empty()) continue;
      auto loc = [&](std::size_t k) { return Located{tokens[k].text, number, tokens[k].column}; };
      if (!header) {
        if (tokens.size() != 3 || tokens[0].text != "format" || tokens[1].text != "gpd")
          syntax(number, tokens[0].column, "header", "expected 'format gpd 1'");
        if (tokens[2].text != "1") syntax(number, tokens[2].column, "version", "unsupported format version");
        header = true;
        continue;
      }
      if (tokens.size() == 1 && (tokens[0].text == "graph" || tokens[0].text == "rotation" ||
                                 tokens[0].text == "double_points" || tokens[0].text == "lift")) {
        section = tokens[0].text;
        if (!seen_sections_.insert(section).second)
          syntax(number, tokens[0].column, "duplicate section", "section '" + section + "' repeated");
        if (section == "lift") has_lift_ = true;
        continue;
      }
      if (section.empty()) syntax(number, tokens[0].column, "unknown section", "content outside a section");
      if (section == "graph") {
        if (tokens[0].text == "vertex" && tokens.size() == 2) {
          require_name(loc(1));
          vertices_.push_back(loc(1));
        } else if (tokens[0].text == "edge" && tokens.size() == 4) {
          for (int k = 1; k < 4; ++k) require_name(loc(k));
          edges_.push_back({loc(1), loc(2), loc(3)});
        } else {
          syntax(number, tokens[0].column, "graph line", "expected 'vertex NAME' or 'edge NAME FROM TO'");
        }
      } else if (section == "rotation") {
        if (tokens.size() < 2 || tokens[1].text != ":")
          syntax(number, tokens[0].column, "rotation line", "expected 'VERTEX : DARTS...'");
        require_name(loc(0));
        std::vector<Located> darts;
        for (std::size_t k = 2; k < tokens.size(); ++k) {
          require_dart(loc(k));
          darts.push_back(loc(k));
        }
        rotations_.push_back({loc(0), std::move(darts)});
      } else if (section == "double_points") {
        if (tokens.size() < 5 || tokens[1].text != ":" || tokens[4].text != ":")
          syntax(number, tokens[0].column, "double point line",
                 "expected 'NAME : EDGE@K EDGE@K : DARTS...'");
        require_name(loc(0));
        RawDoublePoint dp{loc(0), {loc(2), loc(3)}, {}};
        require_passage(loc(2));
        require_passage(loc(3));
        for (std::size_t k = 5; k < tokens.size(); ++k) {
          require_dart(loc(k));
          dp.darts.push_back(loc(k));
        }
        double_points_.push_back(std::move(dp));
      } else {
        if (tokens.size() != 3 || tokens[1].text != ":")
          syntax(number, tokens[0].column, "lift line", "expected 'NAME : EDGE@K'");
        require_passage(loc(2));
        lift_.push_back({loc(0), loc(2)});
      }
    }
    if (!header) syntax(number + 1, 1, "header", "missing 'format gpd 1'");
    if (!seen_sections_.count("graph")) syntax(number + 1, 1, "missing section", "no graph section");
  }

  void require_name(const Located& t) {
    if (!valid_name(t.text)) syntax(t.line, t.column, "name", "invalid name '" + t.text + "'");
  }

  static std::pair<std::string, std::string> split(const std::string& s, char sep) {
    const auto k = s.rfind(sep);
    if (k == std::string::npos) return {"", ""};
    return {s.substr(0, k), s.substr(k + 1)};
  }

  static bool is_number(const std::string& s) {
    return !s.empty() && s.size() < 9 && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  }

  void require_dart(const Located& t) {
    auto [edge, index] = split(t.text, '.');
    if (!valid_name(edge) || !is_number(index)) syntax(t.line, t.column, "dart", "expected EDGE.INDEX, got '" + t.text + "'");
  }

  void require_passage(const Located& t) {
    auto [edge, index] = split(t.text, '@');
    if (!valid_name(edge) || !is_number(index)) syntax(t.line, t.column, "passage", "expected EDGE@K, got '" + t.text + "'");
  }

  std::optional<EdgeId> edge_of(const Located& t, const AbstractGraph& g, char sep) {
    auto name = split(t.text, sep).first;
    auto e = g.find_edge(name);
    if (!e) semantic(t, "unknown edge", "no edge named '" + name + "'");
    return e;
  }

  GpdDocument build() {
    std::vector<std::string> names;
    std::map<std::string, Located> vertex_at;
    for (const auto& v : vertices_) {
      if (!vertex_at.emplace(v.text, v).second) semantic(v, "duplicate vertex", "vertex '" + v.text + "' declared twice");
      else names.push_back(v.text);
    }
    std::vector<EdgeSpec> specs;
    std::map<std::string, Located> edge_at;
    for (const auto& e : edges_) {
      bool ok = true;
      for (int k : {1, 2})
        if (!vertex_at.count(e[k].text)) {
          semantic(e[k], "unknown vertex", "no vertex named '" + e[k].text + "'");
          ok = false;
        }
      if (!edge_at.emplace(e[0].text, e[0]).second) {
        semantic(e[0], "duplicate edge", "edge '" + e[0].text + "' declared twice");
        ok = false;
      }
      if (ok) specs.push_back({e[0].text, e[1].text, e[2].text});
    }
    if (!semantic_.empty()) throw GpdError(semantic_);
    AbstractGraph g(names, specs);

    std::vector<std::vector<DartRef>> rotation(g.vertex_count());
    std::vector<bool> has_rotation(g.vertex_count(), false);
    for (const auto& [vertex, darts] : rotations_) {
      auto v = g.find_vertex(vertex.text);
      if (!v) {
        semantic(vertex, "unknown vertex", "no vertex named '" + vertex.text + "'");
        continue;
      }
      if (has_rotation[v->value]) semantic(vertex, "duplicate rotation", "vertex '" + vertex.text + "' has two rotations");
      has_rotation[v->value] = true;
      for (const auto& d : darts)
        if (auto e = edge_of(d, g, '.')) rotation[v->value].push_back({*e, std::stoi(split(d.text, '.').second)});
    }
    std::vector<DoublePoint> dps;
    std::map<std::string, int> dp_index;
    for (const auto& raw : double_points_) {
      DoublePoint dp{raw.name.text, {}, {}};
      if (!dp_index.emplace(raw.name.text, static_cast<int>(dps.size())).second)
        semantic(raw.name, "duplicate double point", "double point '" + raw.name.text + "' declared twice");
      for (int k = 0; k < 2; ++k)
        if (auto e = edge_of(raw.passages[k], g, '@'))
          dp.passages[k] = {*e, std::stoi(split(raw.passages[k].text, '@').second)};
      for (const auto& d : raw.darts)
        if (auto e = edge_of(d, g, '.')) dp.darts.push_back({*e, std::stoi(split(d.text, '.').second)});
      dps.push_back(std::move(dp));
    }
    if (!semantic_.empty()) throw GpdError(semantic_);

    GpdDocument doc{Projection(g, std::move(rotation), dps), std::nullopt};
    for (const auto& v : validate(doc.projection)) semantic(locate(v.element), v.code, v.element + ": " + v.detail);
    if (!semantic_.empty()) throw GpdError(semantic_);

    if (has_lift_) {
      std::vector<int> over(dps.size(), -1);
      for (const auto& [name, passage] : lift_) {
        auto it = dp_index.find(name.text);
        if (it == dp_index.end()) {
          semantic(name, "unknown double point", "no double point named '" + name.text + "'");
          continue;
        }
        auto e = edge_of(passage, g, '@');
        if (!e) continue;
        const Passage pa{*e, std::stoi(split(passage.text, '@').second)};
        const auto& dp = dps[it->second];
        if (pa == dp.passages[0]) over[it->second] = 0;
        else if (pa == dp.passages[1]) over[it->second] = 1;
        else semantic(passage, "lift passage", passage.text + " does not pass through " + name.text);
      }
      for (std::size_t i = 0; i < over.size(); ++i)
        if (over[i] < 0) semantic(double_points_[i].name, "incomplete lift", "no over passage for " + dps[i].name);
      if (!semantic_.empty()) throw GpdError(semantic_);
      doc.over.emplace(over.begin(), over.end());
    }
    return doc;
  }

  Located locate(const std::string& element) const {
    for (const auto& dp : double_points_)
      if (dp.name.text == element) return dp.name;
    for (const auto& [v, darts] : rotations_)
      if (v.text == element) return v;
    for (const auto& e : edges_)
      if (e[0].text == element) return e[0];
    for (const auto& v : vertices_)
      if (v.text == element) return v;
    return {element, 1, 1};
  }

  const std::string& text_;
  std::set<std::string> seen_sections_;
  bool has_lift_ = false;
  std::vector<Located> vertices_;
  std::vector<std::array<Located, 3>> edges_;
  std::vector<std::pair<Located, std::vector<Located>>> rotations_;
  std::vector<RawDoublePoint> double_points_;
  std::vector<std::pair<Located, Located>> lift_;
  std::vector<Diagnostic> semantic_;
};

std::string dart_text(const AbstractGraph& g, DartRef d) { return dart_name(g, d); }

std::string passage_text(const AbstractGraph& g, Passage p) {
  return g.edge(p.edge).name + "@" + std::to_string(p.ordinal);
}

}  // namespace

GpdError::GpdError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(summarize(diagnostics)), diagnostics_(std::move(diagnostics)) {}

bool GpdError::syntax() const {
  return !diagnostics_.empty() && diagnostics_.front().kind == Diagnostic::Kind::Syntax;
}

GpdDocument parse_gpd(const std::string& text) { return Parser(text).run(); }

GpdDocument load_gpd(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GpdError({{Diagnostic::Kind::Syntax, "io", 0, 0, "cannot read " + path}});
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_gpd(buffer.str());
}

std::string serialize_gpd(const Projection& p) {
  const AbstractGraph& g = p.graph();
  std::ostringstream os;
  os << "format gpd 1\ngraph\n";
  for (const auto& v : g.vertex_names()) os << "  vertex " << v << "\n";
  for (const auto& e : g.edges())
    os << "  edge " << e.name << " " << g.vertex_name(e.source) << " " << g.vertex_name(e.target) << "\n";
  os << "rotation\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    os << "  " << g.vertex_name(VertexId{static_cast<int>(v)}) << " :";
    if (v < p.rotation().size())
      for (DartRef d : p.rotation()[v]) os << " " << dart_text(g, d);
    os << "\n";
  }
  if (p.crossing_number() > 0) {
    os << "double_points\n";
    for (const auto& dp : p.double_points()) {
      os << "  " << dp.name << " : " << passage_text(g, dp.passages[0]) << " "
         << passage_text(g, dp.passages[1]) << " :";
      for (DartRef d : dp.darts) os << " " << dart_text(g, d);
      os << "\n";
    }
  }
  return os.str();
}

std::string serialize_gpd(const Lift& f) {
  const Projection& p = *f.projection;
  std::string out = serialize_gpd(p);
  out += "lift\n";
  for (int i = 0; i < p.crossing_number(); ++i) {
    const auto& dp = p.double_points()[i];
    out += "  " + dp.name + " : " + passage_text(p.graph(), dp.passages[f.over[i]]) + "\n";
  }
  return out;
}

}  // namespace regproj
