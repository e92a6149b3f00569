// Local labelling conventions shared by every module.
//
// Vertices are 0..3. Face i is the face opposite vertex i. Edges are
// unordered vertex pairs, indexed 0..5 in lexicographic order.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace twistnf {

inline constexpr std::array<std::array<int, 2>, 6> kEdges{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

int edge_index(int a, int b);
inline bool face_has_vertex(int f, int v) { return f != v; }
inline bool face_has_edge(int f, int e) {
  return kEdges[e][0] != f && kEdges[e][1] != f;
}
std::array<int, 3> face_vertices(int f);
// The edge of face f opposite its vertex v (v must lie in f).
int opposite_edge_in_face(int f, int v);
std::string edge_name(int e);

// Thrown for malformed input; `what()` is user-facing.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a configured resource cap is exceeded.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace twistnf
