#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "regproj/projection.hpp"

namespace regproj {

enum class MirrorConvention { Identified, Distinct };

// Isotopy-class code of a projection whose graph is a circle (any number of
// degree-two vertices). Throws std::invalid_argument for other graphs.
std::string canonical_form(const Projection& p, MirrorConvention mirrors);

struct SphericalCurveClass {
  std::string id;  // C0, C1, C2a, ...
  int crossing_number = 0;
  std::string code;
  std::string gauss_word;  // e.g. "121323" walking from the vertex
  Projection representative;
  bool is_trefoil_shadow = false;  // some lift is a trefoil
};

struct CurveCatalog {
  MirrorConvention mirrors = MirrorConvention::Identified;
  std::vector<SphericalCurveClass> classes;
};

// Generates every Gauss word, keeps the spherical realizations and dedupes
// by canonical_form. Throws std::out_of_range("out of catalog range") for
// max_cr > 3.
CurveCatalog enumerate_classes(int max_cr, MirrorConvention mirrors);

// Runs both conventions and keeps the one that yields ten classes at
// max_cr = 3 (cached).
const CurveCatalog& standard_catalog();

const SphericalCurveClass* find_class(const CurveCatalog& catalog, const Projection& p);

// False only for the trefoil shadow.
bool is_trivial_circle_projection(const Projection& p);

// One-vertex circle projection from a Gauss word (each symbol twice) and one
// rotation bit per double point.
Projection circle_from_gauss(const std::string& word, const std::vector<bool>& flips);

}  // namespace regproj
