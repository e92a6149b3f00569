// Cell structure of the boundary of a truncated tetrahedron.
//
// A marked edge e = (u,w) is cut off by a rectangle R_e: its long sides lie in
// the two faces containing e, its short sides in the face through u missing w
// and the face through w missing u. An isolated marked vertex v is cut off by
// a triangle T_v with one side in each face at v. What is left of each face is
// a polygon ("face remnant"). Curves on this boundary are recorded by the
// complex edges (sides) they cross.
#pragma once

#include <compare>
#include <string>
#include <vector>

#include "twistnf/triangulation.hpp"

namespace twistnf {

// A side of the complex, in local labels.
//   Edge:  remnant of unmarked edge `edge`
//   Rect:  side of R_edge lying in face `face`
//   Tri:   side of T_vertex lying in face `face`
struct Token {
  enum Kind : std::uint8_t { Edge, Rect, Tri } kind = Edge;
  std::int8_t face = -1;
  std::int8_t edge = -1;
  std::int8_t vertex = -1;

  static Token edge_remnant(int e) { return {Edge, -1, std::int8_t(e), -1}; }
  static Token rect(int f, int e) { return {Rect, std::int8_t(f), std::int8_t(e), -1}; }
  static Token tri(int f, int v) { return {Tri, std::int8_t(f), -1, std::int8_t(v)}; }

  std::string str() const;
  auto operator<=>(const Token&) const = default;
};

// Where a side meets a face remnant polygon, in terms that survive gluing:
// either a (possibly marked) tetrahedron edge or a truncated corner.
struct FaceSide {
  enum Kind : std::uint8_t { EdgeSide, CornerSide } kind = EdgeSide;
  std::int8_t id = -1;  // edge index or vertex
  auto operator<=>(const FaceSide&) const = default;
};

enum class RectSide : std::uint8_t { Long, Short };

class BoundaryComplex {
 public:
  enum class CellKind : std::uint8_t { Face, Rect, Tri };
  struct Cell {
    CellKind kind;
    int id;                  // face, edge or vertex
    std::vector<int> sides;  // complex-edge ids in cyclic order
    std::vector<char> forward;
  };
  struct Side {
    Token token;
    int a, b;      // endpoint ids (canonical direction a -> b)
    int cells[2];  // the two cells it separates
  };

  explicit BoundaryComplex(TetrahedronMarking m);

  const TetrahedronMarking& marking() const { return m_; }
  const std::vector<Side>& sides() const { return sides_; }
  const std::vector<Cell>& cells() const { return cells_; }
  int side_of(const Token& t) const;  // -1 if absent
  // Cell shared by two distinct sides, or -1.
  int common_cell(int s1, int s2) const;
  // The face-remnant side a token presents to face f (token must border f).
  FaceSide face_side(const Token& t, int f) const;
  bool is_face_cell(int c) const { return cells_[c].kind == CellKind::Face; }

  // Rectangle side geometry: long (in a face containing e) or short, and for
  // short sides the end vertex.
  RectSide rect_side(const Token& t) const;
  int rect_end(const Token& t) const;

 private:
  int point(const std::string& key);
  int add_side(Token t, int a, int b);
  void add_cell(CellKind k, int id, const std::vector<int>& walk);

  TetrahedronMarking m_;
  std::vector<std::string> point_keys_;
  std::vector<Side> sides_;
  std::vector<Cell> cells_;
};

}  // namespace twistnf
