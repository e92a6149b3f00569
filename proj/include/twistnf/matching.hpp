// Matching equations over (tetrahedron, normal disc type) variables, the
// compatibility relation, and rectangle boundary patterns.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistnf/disc_catalog.hpp"
#include "twistnf/triangulation.hpp"

namespace twistnf {

struct Variable {
  int tet;
  int type;  // index into catalog_for(marking of tet).normal
};

struct RectangleIncidence {
  int tet;
  int edge;  // local marked edge
  std::vector<std::pair<int, RectArc>> arcs;  // (variable, crossing), with multiplicity
};

struct MatchingSystem {
  MarkedTriangulation tri;  // empty (t = 0) for raw systems read from a file
  std::vector<Variable> vars;
  std::vector<std::vector<std::int64_t>> equations;
  std::vector<std::string> equation_labels;
  std::vector<std::pair<int, int>> incompatible;  // i < j
  std::vector<RectangleIncidence> rectangles;

  int size() const { return static_cast<int>(vars.size()); }
  const DiscCatalog& catalog(int var) const;
  const NormalDiscType& disc(int var) const;
  // Largest sum of absolute coefficients over the equations (0 if none).
  std::int64_t max_abs_sum() const;
};

using SurfaceVector = std::vector<std::int64_t>;

MatchingSystem build_matching_system(const MarkedTriangulation& tri);
inline MatchingSystem build_matching_system(const TruncatedTriangulation& tt) {
  return build_matching_system(*tt.source);
}

// Incompatible pairs (i < j) of normal disc types for one marking.
const std::vector<std::pair<int, int>>& incompatible_pairs(const TetrahedronMarking& m);
const std::vector<std::pair<int, int>>& incompatible_pairs(TetType t);

bool is_solution(const SurfaceVector& v, const MatchingSystem& sys);
// First incompatible pair with both coordinates non-zero, if any.
std::optional<std::pair<int, int>> incompatibility(const SurfaceVector& v,
                                                   const MatchingSystem& sys);

struct RectanglePattern {
  enum Kind { Longitudinal, Meridional, MeridionalPlusCorners, Invalid } kind;
  std::int64_t meridional = 0;
  int corners = 0;
  std::string str() const;
};

// Aggregate crossing counts of one rectangle under v.
struct RectangleTally {
  std::int64_t longitudinal = 0, meridional = 0;
  std::map<std::pair<int, int>, std::int64_t> corners;  // (long face, end) -> count
};
RectangleTally tally(const SurfaceVector& v, const RectangleIncidence& r);
RectanglePattern rectangle_pattern(const SurfaceVector& v, const RectangleIncidence& r);
// Throws InputError if v is not a solution.
bool is_boundary_restricted(const SurfaceVector& v, const MatchingSystem& sys);

// System file: `vars <n>`, optional `var <tet> <encoding>` lines (these need
// the triangulation to resolve), `eq <c1> ... <cn>`, `incompat <i> <j>`.
std::string serialize_system(const MatchingSystem& sys);
MatchingSystem parse_system(const std::string& text, const MarkedTriangulation* tri = nullptr);
MatchingSystem load_system(const std::string& path, const MarkedTriangulation* tri = nullptr);

}  // namespace twistnf
