#include <doctest.h>

#include <random>
#include <set>

#include "support/random_triangulation.hpp"
#include "twistnf/matching.hpp"

using namespace twistnf;

namespace {

std::string fixture(const std::string& name) { return std::string(TWISTNF_FIXTURES) + "/" + name; }

// Index of the normal triangle cutting off vertex u in an unmarked cell.
int corner_triangle(int u) {
  const auto& cat = catalog_for(TetType::Unmarked);
  for (int k = 0; k < static_cast<int>(cat.normal.size()); ++k) {
    const auto& p = cat.normal[k].edge_points;
    if (p.size() != 3) continue;
    bool at = true;
    for (int e : p) at &= kEdges[e][0] == u || kEdges[e][1] == u;
    if (at) return k;
  }
  return -1;
}

}  // namespace

TEST_CASE("two unmarked tetrahedra sharing a face") {
  auto sys = build_matching_system(load_triangulation(fixture("two_unmarked.tri")));
  CHECK(sys.size() == 14);
  CHECK(sys.equations.size() == 3);
  CHECK(sys.max_abs_sum() == 4);
  for (const auto& row : sys.equations) {
    std::int64_t s = 0;
    for (auto c : row) s += c;
    CHECK(s == 0);
  }
  std::vector<std::pair<int, int>> expect{{1, 2}, {1, 4}, {2, 4}, {8, 9}, {8, 11}, {9, 11}};
  CHECK(sys.incompatible == expect);
}

TEST_CASE("unmarked incompatibility is the quad pairs") {
  const auto& pairs = incompatible_pairs(TetType::Unmarked);
  CHECK(pairs.size() == 3);
  const auto& cat = catalog_for(TetType::Unmarked);
  for (auto [i, j] : pairs) {
    CHECK(i < j);
    CHECK(cat.normal[i].edge_points.size() == 4);
    CHECK(cat.normal[j].edge_points.size() == 4);
  }
}

TEST_CASE("incompatibility is symmetric-free and irreflexive") {
  for (TetType t : kAllTypes) {
    std::set<std::pair<int, int>> seen;
    for (auto [i, j] : incompatible_pairs(t)) {
      CHECK(i < j);
      CHECK(seen.insert({i, j}).second);
    }
  }
}

TEST_CASE("vertex links solve the matching equations") {
  std::mt19937_64 rng(11);
  testing::RandomOptions opt;
  opt.link_probability = 0;
  opt.max_vertex_marks = 0;
  for (int k = 0; k < 25; ++k) {
    auto tri = testing::random_triangulation(rng, opt);
    auto sys = build_matching_system(tri);
    for (int c = 0; c < tri.vertex_classes; ++c) {
      SurfaceVector v(sys.size(), 0);
      for (int x = 0; x < sys.size(); ++x) {
        auto [tet, type] = sys.vars[x];
        for (int u = 0; u < 4; ++u)
          if (tri.vclass[tet][u] == c && corner_triangle(u) == type) ++v[x];
      }
      CHECK(is_solution(v, sys));
      CHECK(!incompatibility(v, sys));
      CHECK(is_boundary_restricted(v, sys));
    }
  }
}

TEST_CASE("equations are supported on the two glued tetrahedra") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 25; ++k) {
    auto tri = testing::random_triangulation(rng);
    auto sys = build_matching_system(tri);
    CHECK(sys.size() <= 59 * tri.t);
    for (const auto& row : sys.equations) {
      std::set<int> tets;
      bool nonzero = false;
      for (int x = 0; x < sys.size(); ++x)
        if (row[x] != 0) {
          tets.insert(sys.vars[x].tet);
          nonzero = true;
        }
      CHECK(nonzero);
      CHECK(tets.size() <= 2);
    }
  }
}

TEST_CASE("system files round-trip") {
  auto tri = load_triangulation(fixture("square_unknot.tri"));
  auto sys = build_matching_system(tri);
  auto text = serialize_system(sys);
  auto back = parse_system(text, &tri);
  CHECK(back.size() == sys.size());
  CHECK(back.equations == sys.equations);
  CHECK(back.incompatible == sys.incompatible);
  CHECK(serialize_system(back) == text);

  auto raw = parse_system("# x + y = 2z\nvars 3\neq 1 1 -2\nincompat 0 1\n");
  CHECK(raw.size() == 3);
  CHECK(raw.incompatible == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("system file errors name the line") {
  auto err = [](const std::string& text) {
    try {
      parse_system(text);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(err("eq 1 2\n").find("line 1") != std::string::npos);
  CHECK(err("vars 2\neq 1\n").find("line 2") != std::string::npos);
  CHECK(err("vars 2\neq 1 x\n").find("line 2") != std::string::npos);
  CHECK(err("vars 2\nvar 0 E01\n").find("line 2") != std::string::npos);
}

TEST_CASE("rectangle patterns") {
  RectangleIncidence r{0, 0, {}};
  auto add = [&](int var, RectCrossing k, int face = -1, int end = -1) {
    r.arcs.push_back({var, RectArc{0, k, face, end}});
  };
  add(0, RectCrossing::Longitudinal);
  add(1, RectCrossing::Meridional);
  add(2, RectCrossing::Corner, 2, 0);
  add(3, RectCrossing::Corner, 3, 1);
  add(4, RectCrossing::Corner, 2, 1);
  using K = RectanglePattern;
  CHECK(rectangle_pattern({1, 0, 0, 0, 0}, r).kind == K::Longitudinal);
  CHECK(rectangle_pattern({2, 0, 0, 0, 0}, r).kind == K::Invalid);
  CHECK(rectangle_pattern({1, 1, 0, 0, 0}, r).kind == K::Invalid);
  CHECK(rectangle_pattern({0, 3, 0, 0, 0}, r).str() == "meridional(3)");
  CHECK(rectangle_pattern({0, 0, 0, 0, 0}, r).str() == "meridional(0)");
  CHECK(rectangle_pattern({0, 2, 1, 0, 0}, r).str() == "meridional(2)+corners(1)");
  CHECK(rectangle_pattern({0, 2, 1, 1, 0}, r).str() == "meridional(2)+corners(2)");
  CHECK(rectangle_pattern({0, 0, 1, 0, 1}, r).kind == K::Invalid);  // same long face
  CHECK(rectangle_pattern({0, 0, 2, 0, 0}, r).kind == K::Invalid);
}

TEST_CASE("boundary restriction needs a solution") {
  auto sys = build_matching_system(load_triangulation(fixture("two_unmarked.tri")));
  SurfaceVector v(sys.size(), 0);
  v[0] = 1;
  CHECK_THROWS_AS(is_boundary_restricted(v, sys), InputError);
}
