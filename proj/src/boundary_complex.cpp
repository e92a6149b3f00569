#include "twistnf/boundary_complex.hpp"

#include <algorithm>
#include <cassert>

namespace twistnf {

std::string Token::str() const {
  switch (kind) {
    case Edge: return "E" + edge_name(edge);
    case Rect: return "R" + edge_name(edge) + "/" + std::to_string(face);
    case Tri: return "T" + std::to_string(vertex) + "/" + std::to_string(face);
  }
  return "?";
}

namespace {

int other_in_face(int f, int a, int b) {
  for (int v : face_vertices(f))
    if (v != a && v != b) return v;
  return -1;
}

}  // namespace

int BoundaryComplex::point(const std::string& key) {
  auto it = std::find(point_keys_.begin(), point_keys_.end(), key);
  if (it != point_keys_.end()) return static_cast<int>(it - point_keys_.begin());
  point_keys_.push_back(key);
  return static_cast<int>(point_keys_.size()) - 1;
}

int BoundaryComplex::add_side(Token t, int a, int b) {
  sides_.push_back({t, a, b, {-1, -1}});
  return static_cast<int>(sides_.size()) - 1;
}

void BoundaryComplex::add_cell(CellKind k, int id, const std::vector<int>& walk) {
  Cell c{k, id, walk, {}};
  int cid = static_cast<int>(cells_.size());
  std::size_t n = walk.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Side& s = sides_[walk[i]];
    const Side& nx = sides_[walk[(i + 1) % n]];
    bool fwd = s.b == nx.a || s.b == nx.b;
    assert(fwd || s.a == nx.a || s.a == nx.b);
    c.forward.push_back(fwd);
    Side& ms = sides_[walk[i]];
    (ms.cells[0] < 0 ? ms.cells[0] : ms.cells[1]) = cid;
  }
  cells_.push_back(std::move(c));
}

BoundaryComplex::BoundaryComplex(TetrahedronMarking m) : m_(m) {
  auto cut = [&](int e, int v) {
    return point("c" + std::to_string(e) + "." + std::to_string(v));
  };
  auto end_pt = [&](int e, int v) {
    return m_.vertex(v) ? cut(e, v) : point("v" + std::to_string(v));
  };

  std::vector<int> edge_side(6, -1), rect_long(24, -1), rect_short(24, -1),
      tri_side(16, -1);
  for (int e = 0; e < 6; ++e) {
    if (m_.edge(e)) continue;
    auto [a, b] = kEdges[e];
    edge_side[e] = add_side(Token::edge_remnant(e), end_pt(e, a), end_pt(e, b));
  }
  for (int v = 0; v < 4; ++v) {
    if (!m_.isolated(v)) continue;
    for (int f = 0; f < 4; ++f) {
      if (f == v) continue;
      int p = -1, q = -1;
      for (int x : face_vertices(f))
        if (x != v) (p < 0 ? p : q) = x;
      tri_side[4 * f + v] = add_side(Token::tri(f, v), cut(edge_index(v, p), v),
                                     cut(edge_index(v, q), v));
    }
  }
  for (int e = 0; e < 6; ++e) {
    if (!m_.edge(e)) continue;
    auto [u, w] = kEdges[e];
    for (int f = 0; f < 4; ++f) {
      if (face_has_edge(f, e)) {
        int x = other_in_face(f, u, w);
        rect_long[4 * e + f] = add_side(Token::rect(f, e), cut(edge_index(u, x), u),
                                        cut(edge_index(w, x), w));
      } else {
        int end = f == w ? u : w;  // the face opposite w passes through u
        int x = -1, y = -1;
        for (int z : face_vertices(f))
          if (z != end) (x < 0 ? x : y) = z;
        rect_short[4 * e + f] = add_side(
            Token::rect(f, e), cut(edge_index(end, x), end), cut(edge_index(end, y), end));
      }
    }
  }

  // Face remnants, walking a -> b -> c -> a.
  for (int f = 0; f < 4; ++f) {
    auto fv = face_vertices(f);
    int me = m_.marked_edge_in_face(f);
    std::vector<int> walk;
    for (int k = 0; k < 3; ++k) {
      int prev = fv[(k + 2) % 3], v = fv[k], next = fv[(k + 1) % 3];
      int in_e = edge_index(prev, v), out_e = edge_index(v, next);
      if (m_.vertex(v) && me != in_e && me != out_e) {
        if (m_.isolated(v)) walk.push_back(tri_side[4 * f + v]);
        else walk.push_back(rect_short[4 * m_.marked_edge_at(v) + f]);
      }
      walk.push_back(m_.edge(out_e) ? rect_long[4 * out_e + f] : edge_side[out_e]);
    }
    add_cell(CellKind::Face, f, walk);
  }
  for (int e = 0; e < 6; ++e) {
    if (!m_.edge(e)) continue;
    auto [u, w] = kEdges[e];
    std::vector<int> longs;
    for (int f = 0; f < 4; ++f)
      if (face_has_edge(f, e)) longs.push_back(rect_long[4 * e + f]);
    // short side at w lies in the face opposite u, and vice versa
    add_cell(CellKind::Rect, e,
             {longs[0], rect_short[4 * e + u], longs[1], rect_short[4 * e + w]});
  }
  for (int v = 0; v < 4; ++v) {
    if (!m_.isolated(v)) continue;
    std::vector<int> nb;
    for (int x = 0; x < 4; ++x)
      if (x != v) nb.push_back(x);
    // side between edges (v,nb[i]) and (v,nb[i+1]) lies in the face opposite
    // the remaining neighbour
    std::vector<int> walk;
    for (int i = 0; i < 3; ++i) walk.push_back(tri_side[4 * nb[(i + 2) % 3] + v]);
    add_cell(CellKind::Tri, v, walk);
  }
}

int BoundaryComplex::side_of(const Token& t) const {
  for (std::size_t i = 0; i < sides_.size(); ++i)
    if (sides_[i].token == t) return static_cast<int>(i);
  return -1;
}

int BoundaryComplex::common_cell(int s1, int s2) const {
  if (s1 == s2) return -1;
  for (int a : sides_[s1].cells)
    for (int b : sides_[s2].cells)
      if (a == b && a >= 0) return a;
  return -1;
}

FaceSide BoundaryComplex::face_side(const Token& t, int f) const {
  switch (t.kind) {
    case Token::Edge: return {FaceSide::EdgeSide, t.edge};
    case Token::Tri: return {FaceSide::CornerSide, t.vertex};
    case Token::Rect:
      if (face_has_edge(f, t.edge)) return {FaceSide::EdgeSide, t.edge};
      return {FaceSide::CornerSide, std::int8_t(rect_end(t))};
  }
  return {};
}

RectSide BoundaryComplex::rect_side(const Token& t) const {
  return face_has_edge(t.face, t.edge) ? RectSide::Long : RectSide::Short;
}

int BoundaryComplex::rect_end(const Token& t) const {
  auto [u, w] = kEdges[t.edge];
  return t.face == w ? u : w;
}

}  // namespace twistnf
