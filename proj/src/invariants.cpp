#include "regproj/invariants.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

namespace regproj {

namespace {

class SlotUnion {
 public:
  explicit SlotUnion(int crossings) : parent_(4 * crossings) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  static int id(SlotRef s) { return 4 * s.crossing + s.slot; }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(SlotRef a, SlotRef b) { parent_[find(id(a))] = find(id(b)); }
  int classes() {
    int n = 0;
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i) n += find(i) == i;
    return n;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

int writhe(const LinkDiagram& d) {
  int w = 0;
  for (const auto& c : d.crossings) w += crossing_sign(c);
  return w;
}

int linking_number(const LinkDiagram& d) {
  if (d.component_count != 2) throw std::invalid_argument("component count");
  int sum = 0;
  for (const auto& c : d.crossings)
    if (is_mixed(c)) sum += crossing_sign(c);
  return sum / 2;
}

LaurentPoly bracket_delta() { return LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2); }

LaurentPoly kauffman_bracket(const LinkDiagram& d) {
  const int n = d.crossing_count();
  const int free_loops = static_cast<int>(d.free_components.size());
  if (n == 0) return bracket_delta().pow(std::max(free_loops - 1, 0));

  // loops -> count of states with a given (a - b) exponent
  std::map<std::pair<int, int>, long long> tally;
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << n); ++state) {
    SlotUnion uf(n);
    int a_minus_b = 0;
    for (int c = 0; c < n; ++c) {
      const Crossing& x = d.crossings[c];
      for (int s = 0; s < 4; ++s) uf.unite({c, s}, x.link[s]);
      const bool a_smoothing = !((state >> c) & 1);
      a_minus_b += a_smoothing ? 1 : -1;
      // The A-smoothing merges the corners swept counterclockwise by the over strand.
      const bool pair_12 = (x.over == 0) == a_smoothing;
      if (pair_12) {
        uf.unite({c, 1}, {c, 2});
        uf.unite({c, 3}, {c, 0});
      } else {
        uf.unite({c, 0}, {c, 1});
        uf.unite({c, 2}, {c, 3});
      }
    }
    ++tally[{a_minus_b, uf.classes() + free_loops}];
  }
  LaurentPoly out;
  const LaurentPoly delta = bracket_delta();
  for (auto [key, count] : tally)
    out += LaurentPoly::monomial(count, key.first) * delta.pow(key.second - 1);
  return out;
}

LaurentPoly normalized_bracket(const LinkDiagram& d) {
  const int w = writhe(d);
  // (-A^3)^(-w) = (-1)^w A^(-3w)
  return LaurentPoly::monomial(w % 2 == 0 ? 1 : -1, -3 * w) * kauffman_bracket(d);
}

long long tricolor_count(const LinkDiagram& d) {
  const int n = d.crossing_count();
  SlotUnion uf(n);
  for (int c = 0; c < n; ++c) {
    const Crossing& x = d.crossings[c];
    for (int s = 0; s < 4; ++s) uf.unite({c, s}, x.link[s]);
    uf.unite({c, x.over}, {c, x.over + 2});
  }
  std::map<int, int> arc_index;
  for (int i = 0; i < 4 * n; ++i)
    if (uf.find(i) == i) arc_index.emplace(i, static_cast<int>(arc_index.size()));
  const int arcs = static_cast<int>(arc_index.size());

  // Rows over Z/3: 2*over - under_a - under_b = 0.
  std::vector<std::vector<int>> rows;
  for (int c = 0; c < n; ++c) {
    const Crossing& x = d.crossings[c];
    std::vector<int> row(arcs, 0);
    auto col = [&](int slot) { return arc_index.at(uf.find(SlotUnion::id({c, slot}))); };
    const int u = 1 - x.over;
    row[col(x.over)] = (row[col(x.over)] + 2) % 3;
    row[col(u)] = (row[col(u)] + 2) % 3;
    row[col(u + 2)] = (row[col(u + 2)] + 2) % 3;
    rows.push_back(std::move(row));
  }
  int rank = 0;
  for (int col = 0; col < arcs && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    const int inv = rows[rank][col];  // 1 and 2 are self-inverse mod 3
    for (int& v : rows[rank]) v = (v * inv) % 3;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const int f = rows[r][col];
      for (int k = 0; k < arcs; ++k) rows[r][k] = ((rows[r][k] - f * rows[rank][k]) % 3 + 3) % 3;
    }
    ++rank;
  }
  long long count = 1;
  const int free_dims = arcs - rank + static_cast<int>(d.free_components.size());
  for (int i = 0; i < free_dims; ++i) count *= 3;
  return count;
}

LaurentPoly unlink_polynomial(int components) { return bracket_delta().pow(components - 1); }

LaurentPoly hopf_polynomial(int linking) {
  LaurentPoly p = LaurentPoly::monomial(-1, -2) + LaurentPoly::monomial(-1, -10);
  return linking > 0 ? p : p.reflected();
}

LaurentPoly trefoil_polynomial(int chirality) {
  LaurentPoly p = LaurentPoly::monomial(-1, -16) + LaurentPoly::monomial(1, -12) +
                  LaurentPoly::monomial(1, -4);
  return chirality > 0 ? p : p.reflected();
}

std::string LinkClass::to_string() const {
  auto signed_param = [this] { return std::string(parameter > 0 ? "+" : "-") + "1"; };
  switch (kind) {
    case Kind::Unknot: return "Unknot";
    case Kind::Unlink: return "Unlink(" + std::to_string(parameter) + ")";
    case Kind::Hopf: return "Hopf(" + signed_param() + ")";
    case Kind::Trefoil: return "Trefoil(" + signed_param() + ")";
    case Kind::Unclassified: return "Unclassified";
  }
  return "Unclassified";
}

LinkClass classify_small_link(const LinkDiagram& d) {
  if (d.crossing_count() > 3) return LinkClass::unclassified();
  const LaurentPoly f = normalized_bracket(d);
  const int k = d.component_count;
  if (k == 1) {
    const long long colorings = tricolor_count(d);
    if (f == LaurentPoly(1)) {
      if (colorings != 3) throw std::logic_error("unknot bracket with nontrivial colorings");
      return LinkClass::unknot();
    }
    for (int chirality : {1, -1}) {
      if (f == trefoil_polynomial(chirality)) {
        if (colorings != 9) throw std::logic_error("trefoil bracket without 9 colorings");
        return LinkClass::trefoil(chirality);
      }
    }
    throw std::logic_error("knot diagram with at most 3 crossings and unexpected bracket " + f.to_string());
  }
  if (k == 2) {
    const int lk = linking_number(d);
    if (lk == 1 || lk == -1) {
      if (f != hopf_polynomial(lk)) throw std::logic_error("linking number and bracket disagree");
      return LinkClass::hopf(lk);
    }
    if (lk == 0 && f == unlink_polynomial(2)) return LinkClass::unlink(2);
    // All three crossings on one component: a trefoil split from a circle.
    for (int chirality : {1, -1}) {
      if (lk == 0 && f == trefoil_polynomial(chirality) * bracket_delta()) {
        if (tricolor_count(d) != 27) throw std::logic_error("split trefoil without 27 colorings");
        return LinkClass::trefoil(chirality);
      }
    }
    throw std::logic_error("2-component diagram with unexpected invariants");
  }
  if (k > 2 && f == unlink_polynomial(k)) return LinkClass::unlink(k);
  throw std::invalid_argument("component count");
}

}  // namespace regproj
