#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "twistnf/disc_catalog.hpp"

using namespace twistnf;

namespace {

TetrahedronMarking permuted(const TetrahedronMarking& m, const std::array<int, 4>& p) {
  TetrahedronMarking r;
  for (int v = 0; v < 4; ++v)
    if (m.vertex(v)) r.vertices |= 1 << p[v];
  for (int e = 0; e < 6; ++e)
    if (m.edge(e)) r.edges |= 1 << edge_index(p[kEdges[e][0]], p[kEdges[e][1]]);
  return r;
}

}  // namespace

TEST_CASE("unmarked catalog is the classical one") {
  const auto& d = enumerate_twisted_discs(TetType::Unmarked);
  REQUIRE(d.size() == 7);
  CHECK(subcount(TetType::Unmarked, "triangle") == 4);
  CHECK(subcount(TetType::Unmarked, "quad") == 3);
  // Quads separate 01|23, 02|13, 03|12: each misses exactly two opposite edges.
  std::set<std::set<int>> missed;
  for (const auto& n : truncate_disc_types(TetType::Unmarked))
    if (n.edge_points.size() == 4) {
      std::set<int> all{0, 1, 2, 3, 4, 5};
      for (int e : n.edge_points) all.erase(e);
      missed.insert(all);
    }
  CHECK(missed == std::set<std::set<int>>{{0, 5}, {1, 4}, {2, 3}});
}

TEST_CASE("reference sub-counts for vertex-marked rows") {
  for (const auto& r : reference_subcounts())
    if (r.type <= TetType::FourVertices) {
      CAPTURE(r.family);
      CHECK(subcount(r.type, r.family) == r.count);
    }
}

TEST_CASE("counts are invariant under relabelling the tetrahedron") {
  std::array<int, 4> p{0, 1, 2, 3};
  for (TetType t : kAllTypes) {
    const auto& base = catalog_for(t);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    do {
      auto m = permuted(base.marking, p);
      const auto& c = catalog_for(m);
      seen.insert({c.twisted.size(), c.normal.size()});
    } while (std::next_permutation(p.begin(), p.end()));
    CAPTURE(type_name(t));
    CHECK(seen.size() == 1);
    CHECK(seen.begin()->first == base.twisted.size());
  }
}

TEST_CASE("serial and parallel enumeration agree") {
  for (TetType t : kAllTypes) {
    auto a = build_catalog(canonical_marking(t), Exec::Serial);
    auto b = build_catalog(canonical_marking(t), Exec::Parallel);
    REQUIRE(a.twisted.size() == b.twisted.size());
    for (std::size_t i = 0; i < a.twisted.size(); ++i)
      CHECK(a.twisted[i].encoding == b.twisted[i].encoding);
  }
}

TEST_CASE("catalog invariants") {
  int global = 0;
  for (TetType t : kAllTypes) {
    const auto& cat = catalog_for(t);
    CAPTURE(type_name(t));
    // Sorted, duplicate-free encodings.
    for (std::size_t i = 1; i < cat.twisted.size(); ++i)
      CHECK(cat.twisted[i - 1].encoding < cat.twisted[i].encoding);
    std::vector<int> hit(cat.normal.size(), 0);
    for (const auto& d : cat.twisted) {
      CHECK(d.sides <= 6);
      int arcs = 0;
      for (const Step& s : d.steps) arcs += cat.stations[s.station].is_arc();
      CHECK(d.sides == static_cast<int>(d.steps.size()) + arcs);
      global = std::max(global, d.sides);
      REQUIRE(d.normal_image >= 0);
      ++hit[d.normal_image];
      auto fan = fan_triangulation(d);
      CHECK(fan.size() == static_cast<std::size_t>(std::max(1, d.sides - 2)));
    }
    // Truncation is onto, and preimage lists agree with the images.
    for (std::size_t k = 0; k < cat.normal.size(); ++k) {
      CHECK(hit[k] > 0);
      CHECK(static_cast<int>(cat.normal[k].preimages.size()) == hit[k]);
    }
    if (t == TetType::Unmarked)
      CHECK(std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; }));
  }
  CHECK(global == 6);
}

TEST_CASE("fan triangulations") {
  const auto& two = catalog_for(TetType::TwoVertices);
  for (const auto& d : two.twisted) {
    if (d.family == "bigon") CHECK(fan_triangulation(d) == std::vector<std::array<int, 3>>{{0, 1, 2}});
    if (d.family == "quad") CHECK(fan_triangulation(d).size() == 2);
  }
}

TEST_CASE("unknown families are rejected") {
  CHECK_THROWS_AS(subcount(TetType::Unmarked, "hexagon"), InputError);
  CHECK_THROWS_AS(subcount(TetType::Unmarked, "quad:old"), InputError);
  CHECK(subcount(TetType::Unmarked, "full-triangle") == 0);
}

TEST_CASE("twist and full-edge compatibility") {
  const auto& cat = catalog_for(TetType::OneEdge);
  auto index = [&](const std::string& enc) {
    for (std::size_t i = 0; i < cat.twisted.size(); ++i)
      if (cat.twisted[i].encoding == enc) return static_cast<int>(i);
    FAIL("missing " << enc);
    return -1;
  };
  // Opposite twists along the marked edge: disjoint intervals on the edge,
  // nested arcs in faces 1, 2 and 3.
  int a = index("A01i+@2,P03@1,P02@3"), b = index("A01i+@3,P02@1,P03@2");
  CHECK(twisted_compatible(cat, a, b));
  CHECK(twisted_compatible(cat, b, a));
  // A full-edge arc leaves no room on the edge for another arc; a type is
  // always compatible with itself (parallel copies).
  int full = index("A01f+@0,P23@1");
  CHECK(!twisted_compatible(cat, full, a));
  CHECK(twisted_compatible(cat, full, full));
  // Symmetry.
  for (int i = 0; i < static_cast<int>(cat.twisted.size()); ++i)
    for (int j = 0; j < i; ++j) CHECK(twisted_compatible(cat, i, j) == twisted_compatible(cat, j, i));
}

TEST_CASE("normal compatibility in an unmarked tetrahedron") {
  const auto& cat = catalog_for(TetType::Unmarked);
  const int n = static_cast<int>(cat.normal.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool quads = cat.normal[i].edge_points.size() == 4 && cat.normal[j].edge_points.size() == 4;
      CHECK(normal_compatible(cat, i, j) == (i == j || !quads));
    }
}

TEST_CASE("per-face arc statistics on vertex rows") {
  CHECK(max_common_arc_count(TetType::Unmarked) == 2);
  CHECK(max_common_arc_count(TetType::OneVertex) == 3);
  for (TetType t : {TetType::TwoVertices, TetType::ThreeVertices, TetType::FourVertices})
    CHECK(max_edge_arc_count(t) == 3);
}

TEST_CASE("two-edge breakdown adds up") {
  int sum = 0, ref = 0;
  for (const auto& b : two_edge_breakdown()) {
    sum += b.count;
    ref += b.reference;
  }
  CHECK(sum == static_cast<int>(enumerate_twisted_discs(TetType::TwoEdges).size()));
  CHECK(ref == 149);
}
