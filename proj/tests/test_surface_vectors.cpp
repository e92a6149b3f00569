#include <doctest.h>

#include <random>

#include "twistnf/surface_vectors.hpp"

using namespace twistnf;

namespace {

std::string fixture(const std::string& name) { return std::string(TWISTNF_FIXTURES) + "/" + name; }

SurfaceVector link_of(const MarkedTriangulation& tri, const MatchingSystem& sys, int c) {
  const auto& cat = catalog_for(TetType::Unmarked);
  SurfaceVector v(sys.size(), 0);
  for (int x = 0; x < sys.size(); ++x) {
    auto [tet, type] = sys.vars[x];
    const auto& p = cat.normal[type].edge_points;
    if (p.size() != 3) continue;
    for (int u = 0; u < 4; ++u) {
      if (tri.vclass[tet][u] != c) continue;
      bool at = true;
      for (int e : p) at &= kEdges[e][0] == u || kEdges[e][1] == u;
      v[x] += at;
    }
  }
  return v;
}

}  // namespace

TEST_CASE("vertex links of two tetrahedra") {
  auto tri = load_triangulation(fixture("two_unmarked.tri"));
  auto sys = build_matching_system(tri);
  // Local vertex 0 is shared (link: two triangles along one arc, four edges
  // crossed); local vertex 3 of tet 0 is not (one triangle, three edges).
  auto shared = link_of(tri, sys, tri.vclass[0][0]);
  auto lone = link_of(tri, sys, tri.vclass[0][3]);
  CHECK(euler_characteristic(shared, sys) == 1);
  CHECK(euler_characteristic(lone, sys) == 1);
  CHECK(weight(shared, sys) == 4);
  CHECK(weight(lone, sys) == 3);
  auto both = haken_sum(shared, lone, sys);
  CHECK(euler_characteristic(both, sys) == 2);
  CHECK(weight(both, sys) == 7);
}

TEST_CASE("haken sum refuses incompatible quads") {
  auto tri = load_triangulation(fixture("two_unmarked.tri"));
  auto sys = build_matching_system(tri);
  SurfaceVector a(sys.size(), 0), b(sys.size(), 0);
  auto [i, j] = sys.incompatible.front();
  a[i] = 1;
  b[j] = 1;
  try {
    haken_sum(a, b, sys);
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("incompatible pair (" + std::to_string(i) + ", " +
                                     std::to_string(j) + ")") != std::string::npos);
  }
}

TEST_CASE("search on the octahedron") {
  auto tri = load_triangulation(fixture("square_unknot.tri"));
  auto res = search_spanning_disc(tri);
  REQUIRE(!res.candidates.empty());
  const auto& w = res.candidates.front();
  // The equatorial disc: one piece per tetrahedron crossing the axis once.
  CHECK(w.euler == 1);
  CHECK(w.weight == 1);
  CHECK(w.compatible);
  CHECK(w.boundary_restricted);
  CHECK(w.spans);
  CHECK(w.fundamental);
  CHECK(w.within_bound);
  CHECK(res.winner_within_disc_bound);
  int pieces = 0;
  for (int x = 0; x < res.system.size(); ++x)
    if (w.vector[x]) {
      CHECK(w.vector[x] == 1);
      CHECK(res.system.disc(x).encoding == "E23,R01/0,R01/1");
      ++pieces;
    }
  CHECK(pieces == 4);
  CHECK(euler_characteristic(w.vector, res.system) == 1);
  CHECK(weight(w.vector, res.system) == 1);
  CHECK(spans_knot(w.vector, res.system));
}

TEST_CASE("linear forms are additive on basis pairs") {
  auto tri = load_triangulation(fixture("square_unknot.tri"));
  auto sys = build_matching_system(tri);
  auto basis = hilbert_basis(sys);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  int tried = 0;
  while (tried < 50) {
    const auto& a = basis[pick(rng)];
    const auto& b = basis[pick(rng)];
    SurfaceVector s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
    if (incompatibility(s, sys)) continue;
    ++tried;
    CHECK(haken_sum(a, b, sys) == s);
    CHECK(euler_characteristic(s, sys) == euler_characteristic(a, sys) + euler_characteristic(b, sys));
    CHECK(weight(s, sys) == weight(a, sys) + weight(b, sys));
  }
}

TEST_CASE("search needs a knot") {
  auto tri = load_triangulation(fixture("two_unmarked.tri"));
  CHECK_THROWS_AS(search_spanning_disc(tri), InputError);
}

TEST_CASE("spanning needs boundary restriction") {
  auto tri = load_triangulation(fixture("square_unknot.tri"));
  auto sys = build_matching_system(tri);
  auto basis = hilbert_basis(sys);
  int checked = 0;
  for (const auto& v : basis) {
    if (incompatibility(v, sys) || is_boundary_restricted(v, sys)) continue;
    CHECK_THROWS_AS(spans_knot(v, sys), InputError);
    if (++checked == 5) break;
  }
}
