#include "twistnf/matching.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

namespace twistnf {

namespace {

FaceSide map_side(const FaceSide& s, const std::array<int, 4>& perm) {
  if (s.kind == FaceSide::CornerSide) return {FaceSide::CornerSide, std::int8_t(perm[s.id])};
  auto [a, b] = kEdges[s.id];
  return {FaceSide::EdgeSide, std::int8_t(edge_index(perm[a], perm[b]))};
}

FaceArc map_arc(const FaceArc& a, const std::array<int, 4>& perm) {
  FaceArc out{perm[a.face], map_side(a.a, perm), map_side(a.b, perm)};
  if (out.b < out.a) std::swap(out.a, out.b);
  return out;
}

std::string side_str(const FaceSide& s) {
  return s.kind == FaceSide::EdgeSide ? "e" + edge_name(s.id) : "c" + std::to_string(s.id);
}

void attach_rectangles(MatchingSystem& sys) {
  sys.rectangles.clear();
  const auto& tri = sys.tri;
  for (int i = 0; i < tri.t; ++i)
    for (int e = 0; e < 6; ++e) {
      if (!tri.marking[i].edge(e)) continue;
      RectangleIncidence r{i, e, {}};
      for (int k = 0; k < sys.size(); ++k) {
        if (sys.vars[k].tet != i) continue;
        for (const RectArc& a : sys.disc(k).rect_arcs)
          if (a.edge == e) r.arcs.push_back({k, a});
      }
      sys.rectangles.push_back(std::move(r));
    }
}

void attach_incompatible(MatchingSystem& sys) {
  sys.incompatible.clear();
  std::vector<std::vector<int>> by_tet(sys.tri.t);
  for (int k = 0; k < sys.size(); ++k) by_tet[sys.vars[k].tet].push_back(k);
  for (int i = 0; i < sys.tri.t; ++i) {
    if (by_tet[i].empty()) continue;
    const int base = by_tet[i].front();
    for (auto [a, b] : incompatible_pairs(sys.tri.marking[i]))
      sys.incompatible.push_back({base + a, base + b});
  }
  std::sort(sys.incompatible.begin(), sys.incompatible.end());
}

}  // namespace

const DiscCatalog& MatchingSystem::catalog(int var) const {
  return catalog_for(tri.marking[vars[var].tet]);
}

const NormalDiscType& MatchingSystem::disc(int var) const {
  return catalog(var).normal[vars[var].type];
}

std::int64_t MatchingSystem::max_abs_sum() const {
  std::int64_t best = 0;
  for (const auto& row : equations) {
    std::int64_t s = 0;
    for (auto c : row) s += c < 0 ? -c : c;
    best = std::max(best, s);
  }
  return best;
}

const std::vector<std::pair<int, int>>& incompatible_pairs(const TetrahedronMarking& m) {
  static std::mutex mu;
  static std::map<TetrahedronMarking, std::vector<std::pair<int, int>>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  const DiscCatalog& cat = catalog_for(m);
  const int n = static_cast<int>(cat.normal.size());
  std::vector<std::vector<std::pair<int, int>>> rows(n);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!normal_compatible(cat, i, j)) rows[i].push_back({i, j});
  std::vector<std::pair<int, int>> out;
  for (auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(m, std::move(out)).first->second;
}

const std::vector<std::pair<int, int>>& incompatible_pairs(TetType t) {
  return incompatible_pairs(canonical_marking(t));
}

MatchingSystem build_matching_system(const MarkedTriangulation& input) {
  MatchingSystem sys;
  sys.tri = input;
  if (auto bad = validate_marking(sys.tri); !bad.empty())
    throw InputError(bad.front().kind + " (" + bad.front().where + ")");
  const auto& tri = sys.tri;
  std::vector<int> first(tri.t, 0);
  for (int i = 0; i < tri.t; ++i) {
    first[i] = sys.size();
    const auto& cat = catalog_for(tri.marking[i]);
    for (int k = 0; k < static_cast<int>(cat.normal.size()); ++k) sys.vars.push_back({i, k});
  }
  const int n = sys.size();

  for (int i = 0; i < tri.t; ++i)
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.glue[i][f];
      if (!g) continue;
      const int j = g->tet, h = g->perm[f];
      if (std::make_pair(j, h) < std::make_pair(i, f)) continue;
      const auto& ci = catalog_for(tri.marking[i]);
      const auto& cj = catalog_for(tri.marking[j]);
      const auto& back = tri.glue[j][h]->perm;
      std::set<FaceArc> types;
      for (const auto& d : ci.normal)
        for (const auto& a : d.face_arcs)
          if (a.face == f) types.insert(a);
      for (const auto& d : cj.normal)
        for (const auto& a : d.face_arcs)
          if (a.face == h) types.insert(map_arc(a, back));
      for (const FaceArc& a : types) {
        std::vector<std::int64_t> row(n, 0);
        const FaceArc b = map_arc(a, g->perm);
        for (int k = 0; k < static_cast<int>(ci.normal.size()); ++k)
          row[first[i] + k] += std::count(ci.normal[k].face_arcs.begin(),
                                          ci.normal[k].face_arcs.end(), a);
        for (int k = 0; k < static_cast<int>(cj.normal.size()); ++k)
          row[first[j] + k] -= std::count(cj.normal[k].face_arcs.begin(),
                                          cj.normal[k].face_arcs.end(), b);
        if (std::all_of(row.begin(), row.end(), [](auto c) { return c == 0; })) continue;
        sys.equations.push_back(std::move(row));
        sys.equation_labels.push_back("tet " + std::to_string(i) + " face " + std::to_string(f) +
                                      " ~ tet " + std::to_string(j) + " face " +
                                      std::to_string(h) + ": " + side_str(a.a) + "-" +
                                      side_str(a.b));
      }
    }
  attach_incompatible(sys);
  attach_rectangles(sys);
  return sys;
}

bool is_solution(const SurfaceVector& v, const MatchingSystem& sys) {
  if (static_cast<int>(v.size()) != sys.size()) return false;
  for (auto x : v)
    if (x < 0) return false;
  for (const auto& row : sys.equations) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < row.size(); ++k) s += row[k] * v[k];
    if (s != 0) return false;
  }
  return true;
}

std::optional<std::pair<int, int>> incompatibility(const SurfaceVector& v,
                                                   const MatchingSystem& sys) {
  for (auto [a, b] : sys.incompatible)
    if (v[a] && v[b]) return std::make_pair(a, b);
  return std::nullopt;
}

std::string RectanglePattern::str() const {
  switch (kind) {
    case Longitudinal: return "longitudinal(1)";
    case Meridional: return "meridional(" + std::to_string(meridional) + ")";
    case MeridionalPlusCorners:
      return "meridional(" + std::to_string(meridional) + ")+corners(" +
             std::to_string(corners) + ")";
    case Invalid: return "invalid";
  }
  return "?";
}

RectangleTally tally(const SurfaceVector& v, const RectangleIncidence& r) {
  RectangleTally t;
  for (const auto& [k, a] : r.arcs) {
    if (!v[k]) continue;
    switch (a.kind) {
      case RectCrossing::Longitudinal: t.longitudinal += v[k]; break;
      case RectCrossing::Meridional: t.meridional += v[k]; break;
      case RectCrossing::Corner: t.corners[{a.long_face, a.end}] += v[k]; break;
    }
  }
  return t;
}

RectanglePattern rectangle_pattern(const SurfaceVector& v, const RectangleIncidence& r) {
  RectangleTally t = tally(v, r);
  using K = RectanglePattern;
  if (t.longitudinal > 0) {
    if (t.longitudinal == 1 && t.meridional == 0 && t.corners.empty()) return {K::Longitudinal};
    return {K::Invalid};
  }
  if (t.corners.empty()) return {K::Meridional, t.meridional};
  for (const auto& [c, n] : t.corners)
    if (n > 1) return {K::Invalid};
  if (t.corners.size() > 2) return {K::Invalid};
  if (t.corners.size() == 2) {
    auto a = t.corners.begin()->first, b = std::next(t.corners.begin())->first;
    if (a.first == b.first || a.second == b.second) return {K::Invalid};  // adjacent corners
  }
  return {K::MeridionalPlusCorners, t.meridional, static_cast<int>(t.corners.size())};
}

bool is_boundary_restricted(const SurfaceVector& v, const MatchingSystem& sys) {
  if (!is_solution(v, sys)) throw InputError("vector is not a solution of the matching system");
  for (const auto& r : sys.rectangles)
    if (rectangle_pattern(v, r).kind == RectanglePattern::Invalid) return false;
  return true;
}

std::string serialize_system(const MatchingSystem& sys) {
  std::ostringstream out;
  out << "vars " << sys.size() << "\n";
  if (sys.tri.t > 0)
    for (int k = 0; k < sys.size(); ++k)
      out << "var " << sys.vars[k].tet << " " << sys.disc(k).encoding << "\n";
  for (const auto& row : sys.equations) {
    out << "eq";
    for (auto c : row) out << " " << c;
    out << "\n";
  }
  for (auto [a, b] : sys.incompatible) out << "incompat " << a << " " << b << "\n";
  return out.str();
}

MatchingSystem parse_system(const std::string& text, const MarkedTriangulation* tri) {
  MatchingSystem sys;
  if (tri) {
    sys.tri = *tri;
    if (auto bad = validate_marking(sys.tri); !bad.empty())
      throw InputError(bad.front().kind + " (" + bad.front().where + ")");
  }
  std::istringstream in(text);
  std::string line;
  int lineno = 0, n = -1;
  auto fail = [&](const std::string& msg) -> void {
    throw InputError("line " + std::to_string(lineno) + ": " + msg);
  };
  auto number = [&](const std::string& s) -> std::int64_t {
    std::size_t used = 0;
    std::int64_t x = 0;
    try {
      x = std::stoll(s, &used);
    } catch (...) {
      used = 0;
    }
    if (used != s.size() || s.empty()) fail("expected an integer, got '" + s + "'");
    return x;
  };
  bool have_vars = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto p = line.find('#'); p != std::string::npos) line.resize(p);
    std::istringstream ls(line);
    std::vector<std::string> w;
    for (std::string s; ls >> s;) w.push_back(s);
    if (w.empty()) continue;
    if (w[0] == "vars") {
      if (n >= 0 || w.size() != 2) fail("expected a single 'vars <n>' line");
      n = static_cast<int>(number(w[1]));
      if (n < 1) fail("variable count must be positive");
      continue;
    }
    if (n < 0) fail("'vars <n>' must come first");
    if (w[0] == "var") {
      if (!tri) fail("'var' lines need the triangulation to resolve disc encodings");
      if (w.size() != 3) fail("expected 'var <tet> <encoding>'");
      int t = static_cast<int>(number(w[1]));
      if (t < 0 || t >= sys.tri.t) fail("tetrahedron index out of range");
      const auto& cat = catalog_for(sys.tri.marking[t]);
      auto it = std::find_if(cat.normal.begin(), cat.normal.end(),
                             [&](const auto& d) { return d.encoding == w[2]; });
      if (it == cat.normal.end()) fail("unknown disc type '" + w[2] + "' in tet " + w[1]);
      sys.vars.push_back({t, static_cast<int>(it - cat.normal.begin())});
      have_vars = true;
    } else if (w[0] == "eq") {
      if (static_cast<int>(w.size()) != n + 1)
        fail("equation has " + std::to_string(w.size() - 1) + " coefficients, expected " +
             std::to_string(n));
      std::vector<std::int64_t> row;
      for (std::size_t k = 1; k < w.size(); ++k) row.push_back(number(w[k]));
      sys.equations.push_back(std::move(row));
      sys.equation_labels.push_back("eq " + std::to_string(sys.equations.size() - 1));
    } else if (w[0] == "incompat") {
      if (w.size() != 3) fail("expected 'incompat <i> <j>'");
      int a = static_cast<int>(number(w[1])), b = static_cast<int>(number(w[2]));
      if (a < 0 || b < 0 || a >= n || b >= n || a == b) fail("bad variable index");
      sys.incompatible.push_back({std::min(a, b), std::max(a, b)});
    } else {
      fail("unknown directive '" + w[0] + "'");
    }
  }
  if (n < 0) throw InputError("missing 'vars <n>' line");
  if (have_vars) {
    if (sys.size() != n) throw InputError("'var' line count does not match 'vars'");
    attach_rectangles(sys);
  } else {
    sys.tri = MarkedTriangulation{};
    sys.vars.assign(n, Variable{-1, -1});
  }
  std::sort(sys.incompatible.begin(), sys.incompatible.end());
  return sys;
}

MatchingSystem load_system(const std::string& path, const MarkedTriangulation* tri) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_system(ss.str(), tri);
}

}  // namespace twistnf
