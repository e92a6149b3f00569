// Twisted normal disc types in marked tetrahedra, their restriction to the
// truncated cell, and per-face arc statistics.
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "twistnf/boundary_complex.hpp"
#include "twistnf/triangulation.hpp"

namespace twistnf {

// A place where the disc boundary meets the 1-skeleton.
struct Station {
  enum Kind : std::uint8_t { Vertex, Point, Full, Interior, Exterior0, Exterior1 };
  Kind kind;
  std::int8_t id;  // vertex for Vertex, edge otherwise
  bool is_arc() const { return kind >= Full; }
  std::string str() const;
};

// Location of a boundary point: a vertex, or a slot on an edge (slot 0 lies
// nearer kEdges[e][0]).
struct Loc {
  bool at_vertex;
  std::int8_t id;
  std::int8_t slot;
};

// One station together with the face of the normal arc leaving it. For edge
// arcs, in_end/out_end say which end of the arc the curve enters and leaves.
struct Step {
  std::int16_t station;
  std::int8_t in_end;
  std::int8_t out_end;
  std::int8_t face;
  auto operator<=>(const Step&) const = default;
};

struct TwistedDiscType {
  std::vector<Step> steps;  // canonical rotation/reflection
  std::string encoding;
  std::string family;
  int sides = 0;            // normal arcs + edge arcs
  std::uint8_t vertices_used = 0;
  std::uint8_t arc_edges = 0;  // marked edges carrying an edge arc
  int normal_image = -1;    // index into the truncated list
};

struct FaceArc {
  int face;
  FaceSide a, b;  // a <= b
  auto operator<=>(const FaceArc&) const = default;
};

enum class RectCrossing : std::uint8_t { Longitudinal, Meridional, Corner };

struct RectArc {
  int edge;
  RectCrossing kind;
  int long_face = -1;  // for corners
  int end = -1;        // for corners: the vertex at the short side
};

struct NormalDiscType {
  std::vector<Token> tokens;  // canonical cyclic sequence of crossed sides
  std::string encoding;
  std::vector<FaceArc> face_arcs;       // with multiplicity
  std::vector<RectArc> rect_arcs;
  std::vector<std::array<int, 3>> tri_arcs;  // (vertex, face in, face out)
  std::vector<int> edge_points;         // unmarked edges crossed
  std::vector<int> preimages;           // twisted type indices
};

class DiscCatalog {
 public:
  TetrahedronMarking marking;
  std::vector<Station> stations;
  std::vector<TwistedDiscType> twisted;  // sorted by encoding
  std::vector<NormalDiscType> normal;    // sorted by encoding
  std::unique_ptr<BoundaryComplex> complex;

  std::vector<Loc> ends(int station) const;
  std::string describe(const std::vector<Step>& steps) const;
};

enum class Exec { Serial, Parallel };

// Fresh enumeration for an arbitrary valid marking.
DiscCatalog build_catalog(const TetrahedronMarking& m, Exec exec = Exec::Parallel);
// Memoised, thread-safe.
const DiscCatalog& catalog_for(const TetrahedronMarking& m);
const DiscCatalog& catalog_for(TetType t);

const std::vector<TwistedDiscType>& enumerate_twisted_discs(TetType t);
const std::vector<NormalDiscType>& truncate_disc_types(TetType t);

// Family descriptors: a family name, optionally suffixed ":new" to keep only
// types touching every isolated marked vertex (and, with two marked edges,
// carrying arcs on both). Names: triangle, quad, vertex-touching, bigon,
// triangle-one-vv, triangle-all-vv, quad-all-vv, and <arc>[-<shape>] with
// arc in {full, int, ext, both-edges} and shape in {bigon, triangle, quad,
// pent, hex}.
int subcount(TetType t, const std::string& family);
// Indices into catalog_for(t).twisted, ascending.
std::vector<int> family_members(TetType t, const std::string& family);
std::vector<std::string> family_names(TetType t);

int max_common_arc_count(TetType t);
// Same statistic restricted to arcs joining two edge sides.
int max_edge_arc_count(TetType t);

int sides(const TwistedDiscType& d);
std::vector<std::array<int, 3>> fan_triangulation(const TwistedDiscType& d);

enum class FaceCurveClass { Normal, Monogon, DCurve };
struct ArcEnd {
  enum Kind { AtVertex, InEdge, InFace } kind;
  int id;  // vertex or edge
};
FaceCurveClass classify_face_arc(int face, ArcEnd a, ArcEnd b,
                                 const TetrahedronMarking& m);

// Disjointness of two twisted boundary curves on the untruncated sphere.
bool twisted_compatible(const DiscCatalog& cat, int i, int j);
// Disjointness of two normal disc boundaries on the truncated cell.
bool normal_compatible(const DiscCatalog& cat, int i, int j);

// Breakdown of the two-marked-edge catalog into the buckets the reference
// enumeration adds up (carried over from one edge; from one edge and one
// vertex; arcs on both edges).
struct Bucket {
  std::string name;
  int count;
  int reference;
  std::string detail;
};
std::vector<Bucket> two_edge_breakdown();

// Family sub-counts stated by the reference enumeration, one entry per
// illustrated family (":new" restricts to the types the row adds).
struct ReferenceSubcount {
  TetType type;
  std::string family;
  int count;
};
const std::vector<ReferenceSubcount>& reference_subcounts();

// Reference counts, in TetType order.
inline constexpr std::array<int, 9> kReferenceTwisted{7, 10, 16, 29, 59, 30, 47, 93, 148};
inline constexpr std::array<int, 9> kReferenceNormal{7, 10, 16, 29, 59, 15, 22, 40, 17};
inline constexpr std::array<int, 9> kReferenceMaxArc{2, 3, 3, 3, 3, 3, 3, 6, 6};

}  // namespace twistnf
