#include "twistnf/common.hpp"

namespace twistnf {

int edge_index(int a, int b) {
  if (a > b) std::swap(a, b);
  for (int e = 0; e < 6; ++e)
    if (kEdges[e][0] == a && kEdges[e][1] == b) return e;
  throw std::invalid_argument("not an edge: " + std::to_string(a) + "," +
                              std::to_string(b));
}

std::array<int, 3> face_vertices(int f) {
  std::array<int, 3> out{};
  int k = 0;
  for (int v = 0; v < 4; ++v)
    if (v != f) out[k++] = v;
  return out;
}

int opposite_edge_in_face(int f, int v) {
  auto fv = face_vertices(f);
  int a = -1, b = -1;
  for (int x : fv) {
    if (x == v) continue;
    (a < 0 ? a : b) = x;
  }
  return edge_index(a, b);
}

std::string edge_name(int e) {
  return std::to_string(kEdges[e][0]) + std::to_string(kEdges[e][1]);
}

}  // namespace twistnf
