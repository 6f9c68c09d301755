#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "regproj/lift.hpp"
#include "regproj/projection.hpp"

namespace regproj {

// GPD documents are line oriented:
//
//   format gpd 1
//   graph
//     vertex u
//     edge a u v
//   rotation
//     u : a.0 b.0
//   double_points
//     d1 : a@0 b@0 : a.1 b.1 a.2 b.2
//   lift
//     d1 : a@0
//
// `a.3` is the arc end with index 3 along edge a; `a@0` is the first passage
// of edge a through a double point. `#` at the start of a token opens a
// comment.

struct Diagnostic {
  enum class Kind { Syntax, Semantic };
  Kind kind = Kind::Syntax;
  std::string code;
  int line = 0;
  int column = 0;
  std::string message;

  std::string to_string() const;
};

class GpdError : public std::runtime_error {
 public:
  explicit GpdError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }
  bool syntax() const;

 private:
  std::vector<Diagnostic> diagnostics_;
};

struct GpdDocument {
  Projection projection;
  std::optional<std::vector<std::uint8_t>> over;  // present with a lift section
};

// Throws GpdError; syntax errors stop parsing, semantic errors are collected.
GpdDocument parse_gpd(const std::string& text);
GpdDocument load_gpd(const std::string& path);

std::string serialize_gpd(const Projection& p);
std::string serialize_gpd(const Lift& f);

}  // namespace regproj
