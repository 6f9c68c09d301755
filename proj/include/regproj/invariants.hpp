#pragma once

#include <compare>
#include <string>

#include "regproj/laurent.hpp"
#include "regproj/link_diagram.hpp"

namespace regproj {

int writhe(const LinkDiagram& d);

// Throws std::invalid_argument("component count") unless d has 2 components.
int linking_number(const LinkDiagram& d);

// State sum with delta = -A^2 - A^-2; a single crossingless circle gives 1.
LaurentPoly kauffman_bracket(const LinkDiagram& d);

// (-A^3)^(-writhe) times the bracket; an isotopy invariant.
LaurentPoly normalized_bracket(const LinkDiagram& d);

// Number of Fox 3-colorings of the diagram's arcs.
long long tricolor_count(const LinkDiagram& d);

LaurentPoly bracket_delta();
LaurentPoly unlink_polynomial(int components);
LaurentPoly hopf_polynomial(int linking);
LaurentPoly trefoil_polynomial(int chirality);  // +1: right-handed

struct LinkClass {
  enum class Kind { Unknot, Unlink, Hopf, Trefoil, Unclassified };
  Kind kind = Kind::Unclassified;
  int parameter = 0;  // component count, linking sign, or chirality

  static LinkClass unknot() { return {Kind::Unknot, 1}; }
  static LinkClass unlink(int k) { return {Kind::Unlink, k}; }
  static LinkClass hopf(int sign) { return {Kind::Hopf, sign}; }
  static LinkClass trefoil(int chirality) { return {Kind::Trefoil, chirality}; }
  static LinkClass unclassified() { return {Kind::Unclassified, 0}; }

  bool nontrivial() const { return kind == Kind::Hopf || kind == Kind::Trefoil; }
  // Drops the sign of Hopf links, which depends on the chosen orientations.
  LinkClass unoriented() const {
    return kind == Kind::Hopf ? LinkClass{kind, 1} : *this;
  }
  std::string to_string() const;

  auto operator<=>(const LinkClass&) const = default;
};

// Classifies diagrams with at most three crossings; larger diagrams are
// Unclassified. A trefoil split from a circle counts as Trefoil. Linking number decides Hopf links and the bracket decides
// trefoils; the other invariant must agree or std::logic_error is thrown.
LinkClass classify_small_link(const LinkDiagram& d);

}  // namespace regproj
