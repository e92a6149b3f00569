// Marked triangulations: data model, parser, validator, truncation.
#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "twistnf/common.hpp"

namespace twistnf {

enum class TetType : std::uint8_t {
  Unmarked,
  OneVertex,
  TwoVertices,
  ThreeVertices,
  FourVertices,
  OneEdge,
  OneEdgeOneVertex,
  OneEdgeTwoVertices,
  TwoEdges,
};

inline constexpr std::array<TetType, 9> kAllTypes{
    TetType::Unmarked,      TetType::OneVertex,        TetType::TwoVertices,
    TetType::ThreeVertices, TetType::FourVertices,     TetType::OneEdge,
    TetType::OneEdgeOneVertex, TetType::OneEdgeTwoVertices, TetType::TwoEdges};

// CLI spelling, e.g. "one-edge-one-vertex".
std::string type_name(TetType t);
std::optional<TetType> parse_type_name(const std::string& s);
// Row label used in the printed tables.
std::string type_label(TetType t);
std::string truncated_label(TetType t);

// Bitmask marking of one tetrahedron. Endpoints of marked edges are always
// marked vertices; "isolated" vertices are marked vertices that are not.
struct TetrahedronMarking {
  std::uint8_t vertices = 0;  // bit v
  std::uint8_t edges = 0;     // bit e, e indexes kEdges

  bool vertex(int v) const { return (vertices >> v) & 1; }
  bool edge(int e) const { return (edges >> e) & 1; }
  std::uint8_t isolated_vertices() const;
  int edge_count() const;
  // Marked edge containing v, or -1.
  int marked_edge_at(int v) const;
  // Marked edge lying in face f, or -1 (at most one in a valid marking).
  int marked_edge_in_face(int f) const;
  bool truncated_vertex(int v) const { return vertex(v); }
  bool isolated(int v) const { return (isolated_vertices() >> v) & 1; }

  auto operator<=>(const TetrahedronMarking&) const = default;
};

std::vector<std::string> marking_violations(const TetrahedronMarking& m);
TetType classify_marked_tetrahedron(const TetrahedronMarking& m);
// Representative marking for each type: marked edges 01 (and 23), isolated
// vertices taken in increasing order from the unused labels.
TetrahedronMarking canonical_marking(TetType t);

// perm maps local vertices of this tetrahedron to vertices of `tet`;
// perm[own face] is the glued face of `tet`.
struct Gluing {
  int tet = -1;
  std::array<int, 4> perm{};
  bool operator==(const Gluing&) const = default;
};

struct Violation {
  std::string kind;
  std::string where;
};

struct MarkedTriangulation {
  int t = 0;
  std::vector<std::array<std::optional<Gluing>, 4>> glue;
  std::vector<std::array<int, 2>> vertex_marks;       // (tet, v)
  std::vector<std::array<int, 3>> edge_marks;         // (tet, u, v)
  std::vector<std::vector<std::array<int, 3>>> knots; // explicit cycles

  // Filled by analyse().
  std::vector<std::array<int, 4>> vclass;
  std::vector<std::array<int, 6>> eclass;
  int vertex_classes = 0;
  int edge_classes = 0;
  std::vector<int> edge_degree;      // (tet, edge) incidences per class
  std::vector<char> vertex_marked;   // per vertex class
  std::vector<char> edge_marked;     // per edge class
  std::vector<TetrahedronMarking> marking;

  void analyse();
  // Global endpoints (vertex classes) of an edge class.
  std::array<int, 2> edge_ends(int edge_class) const;
};

// Throws InputError with "line L col C: ..." on syntax errors and with the
// joined violation list when the result is not a valid marked triangulation.
MarkedTriangulation parse_triangulation(const std::string& text);
MarkedTriangulation load_triangulation(const std::string& path);
std::string serialize(const MarkedTriangulation& tri);

// Empty iff every invariant holds. Runs analyse() first.
std::vector<Violation> validate_marking(MarkedTriangulation& tri);

struct TruncatedCell {
  TetType type{};
  TetrahedronMarking marking;
  std::vector<int> rectangles;               // marked local edges
  std::vector<int> vertex_triangles;         // isolated marked vertices
  std::vector<std::array<int, 2>> end_triangles;  // (edge, endpoint)
  int triangle_count() const {
    return static_cast<int>(vertex_triangles.size() + end_triangles.size());
  }
};

struct TruncatedTriangulation {
  const MarkedTriangulation* source = nullptr;
  std::vector<TruncatedCell> cells;
  int rectangle_count() const;
};

TruncatedTriangulation truncate(const MarkedTriangulation& tri);

}  // namespace twistnf
