#include "twistnf/triangulation.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace twistnf {

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) {
    a = find(a), b = find(b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  }
};

const char* kNames[] = {"unmarked",
                        "one-vertex",
                        "two-vertices",
                        "three-vertices",
                        "four-vertices",
                        "one-edge",
                        "one-edge-one-vertex",
                        "one-edge-two-vertices",
                        "two-edges"};

std::string face_name(int f) {
  std::string s;
  for (int v : face_vertices(f)) s += char('0' + v);
  return s;
}

}  // namespace

std::string type_name(TetType t) { return kNames[static_cast<int>(t)]; }

std::optional<TetType> parse_type_name(const std::string& s) {
  for (TetType t : kAllTypes)
    if (s == type_name(t)) return t;
  return std::nullopt;
}

std::string type_label(TetType t) {
  switch (t) {
    case TetType::Unmarked: return "No marked vertices or edges";
    case TetType::OneVertex: return "one marked vertex";
    case TetType::TwoVertices: return "two marked vertices";
    case TetType::ThreeVertices: return "three marked vertices";
    case TetType::FourVertices: return "four marked vertices";
    case TetType::OneEdge: return "1 marked edge";
    case TetType::OneEdgeOneVertex: return "1 marked edge, 1 marked vertex";
    case TetType::OneEdgeTwoVertices: return "1 marked edge, 2 marked vertices";
    case TetType::TwoEdges: return "2 marked edges";
  }
  return "?";
}

std::string truncated_label(TetType t) {
  switch (t) {
    case TetType::Unmarked: return "No truncation";
    case TetType::OneVertex: return "One truncated vertex";
    case TetType::TwoVertices: return "Two truncated vertices";
    case TetType::ThreeVertices: return "Three truncated vertices";
    case TetType::FourVertices: return "Four truncated vertices";
    case TetType::OneEdge: return "One truncated edge";
    case TetType::OneEdgeOneVertex:
      return "One truncated edge, one truncated vertex";
    case TetType::OneEdgeTwoVertices:
      return "One truncated edge, two truncated vertices";
    case TetType::TwoEdges: return "Two truncated edges";
  }
  return "?";
}

// ---------------------------------------------------------------------------

std::uint8_t TetrahedronMarking::isolated_vertices() const {
  std::uint8_t ends = 0;
  for (int e = 0; e < 6; ++e)
    if (edge(e)) ends |= (1u << kEdges[e][0]) | (1u << kEdges[e][1]);
  return vertices & ~ends;
}

int TetrahedronMarking::edge_count() const { return std::popcount(edges); }

int TetrahedronMarking::marked_edge_at(int v) const {
  for (int e = 0; e < 6; ++e)
    if (edge(e) && (kEdges[e][0] == v || kEdges[e][1] == v)) return e;
  return -1;
}

int TetrahedronMarking::marked_edge_in_face(int f) const {
  for (int e = 0; e < 6; ++e)
    if (edge(e) && face_has_edge(f, e)) return e;
  return -1;
}

std::vector<std::string> marking_violations(const TetrahedronMarking& m) {
  std::vector<std::string> out;
  for (int e = 0; e < 6; ++e)
    if (m.edge(e) && !(m.vertex(kEdges[e][0]) && m.vertex(kEdges[e][1])))
      out.push_back("marked edge " + edge_name(e) + " has an unmarked endpoint");
  for (int f = 0; f < 4; ++f) {
    int n = 0;
    for (int e = 0; e < 6; ++e) n += m.edge(e) && face_has_edge(f, e);
    if (n > 1) out.push_back("two marked edges in face " + face_name(f));
  }
  return out;
}

TetType classify_marked_tetrahedron(const TetrahedronMarking& m) {
  auto bad = marking_violations(m);
  if (!bad.empty()) throw InputError("invalid marking: " + bad.front());
  int iso = std::popcount(m.isolated_vertices());
  switch (m.edge_count()) {
    case 0: return static_cast<TetType>(iso);
    case 1: return static_cast<TetType>(5 + iso);
    default: return TetType::TwoEdges;
  }
}

TetrahedronMarking canonical_marking(TetType t) {
  TetrahedronMarking m;
  auto add_edge = [&](int a, int b) {
    m.edges |= 1u << edge_index(a, b);
    m.vertices |= (1u << a) | (1u << b);
  };
  int k = static_cast<int>(t);
  if (k <= 4) {
    m.vertices = static_cast<std::uint8_t>((1u << k) - 1);
  } else if (t == TetType::TwoEdges) {
    add_edge(0, 1);
    add_edge(2, 3);
  } else {
    add_edge(0, 1);
    for (int i = 0; i < k - 5; ++i) m.vertices |= 1u << (2 + i);
  }
  return m;
}

// ---------------------------------------------------------------------------

void MarkedTriangulation::analyse() {
  UnionFind uv(4 * t), ue(6 * t);
  edge_degree.clear();
  for (int i = 0; i < t; ++i)
    for (int f = 0; f < 4; ++f) {
      const auto& g = glue[i][f];
      if (!g || g->tet < 0 || g->tet >= t) continue;
      for (int v = 0; v < 4; ++v)
        if (v != f) uv.unite(4 * i + v, 4 * g->tet + g->perm[v]);
      for (int e = 0; e < 6; ++e)
        if (face_has_edge(f, e)) {
          int a = g->perm[kEdges[e][0]], b = g->perm[kEdges[e][1]];
          if (a == b) continue;
          ue.unite(6 * i + e, 6 * g->tet + edge_index(a, b));
        }
    }
  std::map<int, int> vid, eid;
  vclass.assign(t, {});
  eclass.assign(t, {});
  for (int i = 0; i < t; ++i) {
    for (int v = 0; v < 4; ++v) {
      int r = uv.find(4 * i + v);
      auto it = vid.emplace(r, static_cast<int>(vid.size())).first;
      vclass[i][v] = it->second;
    }
    for (int e = 0; e < 6; ++e) {
      int r = ue.find(6 * i + e);
      auto it = eid.emplace(r, static_cast<int>(eid.size())).first;
      eclass[i][e] = it->second;
    }
  }
  vertex_classes = static_cast<int>(vid.size());
  edge_classes = static_cast<int>(eid.size());
  edge_degree.assign(edge_classes, 0);
  for (int i = 0; i < t; ++i)
    for (int e = 0; e < 6; ++e) ++edge_degree[eclass[i][e]];

  vertex_marked.assign(vertex_classes, 0);
  edge_marked.assign(edge_classes, 0);
  auto mark_edge = [&](int i, int u, int v) {
    edge_marked[eclass[i][edge_index(u, v)]] = 1;
    vertex_marked[vclass[i][u]] = 1;
    vertex_marked[vclass[i][v]] = 1;
  };
  for (auto [i, u, v] : edge_marks) mark_edge(i, u, v);
  if (edge_marks.empty())
    for (const auto& k : knots)
      for (auto [i, u, v] : k) mark_edge(i, u, v);
  for (auto [i, v] : vertex_marks) vertex_marked[vclass[i][v]] = 1;

  marking.assign(t, {});
  for (int i = 0; i < t; ++i) {
    for (int v = 0; v < 4; ++v)
      if (vertex_marked[vclass[i][v]]) marking[i].vertices |= 1u << v;
    for (int e = 0; e < 6; ++e)
      if (edge_marked[eclass[i][e]]) marking[i].edges |= 1u << e;
  }
}

std::array<int, 2> MarkedTriangulation::edge_ends(int c) const {
  for (int i = 0; i < t; ++i)
    for (int e = 0; e < 6; ++e)
      if (eclass[i][e] == c)
        return {vclass[i][kEdges[e][0]], vclass[i][kEdges[e][1]]};
  return {-1, -1};
}

std::vector<Violation> validate_marking(MarkedTriangulation& tri) {
  std::vector<Violation> out;
  auto tet = [](int i) { return "tet " + std::to_string(i); };
  for (int i = 0; i < tri.t; ++i)
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.glue[i][f];
      if (!g) continue;
      std::string where = tet(i) + " face " + face_name(f);
      auto p = g->perm;
      auto sorted = p;
      std::sort(sorted.begin(), sorted.end());
      if (g->tet < 0 || g->tet >= tri.t ||
          sorted != std::array<int, 4>{0, 1, 2, 3}) {
        out.push_back({"malformed gluing", where});
        continue;
      }
      if (g->tet == i && p[f] == f) {
        out.push_back({"face glued to itself", where});
        continue;
      }
      const auto& back = tri.glue[g->tet][p[f]];
      bool inverse = back && back->tet == i;
      if (inverse)
        for (int v = 0; v < 4; ++v) inverse &= back->perm[p[v]] == v;
      if (!inverse) out.push_back({"gluing is not involutive", where});
    }
  if (!out.empty()) return out;
  tri.analyse();

  for (int i = 0; i < tri.t; ++i)
    for (auto& s : marking_violations(tri.marking[i]))
      out.push_back({s.rfind("two marked edges", 0) == 0
                         ? "two marked edges in a face"
                         : "invalid marking",
                     tet(i) + ": " + s});

  // The link: every vertex meets 0 or 2 link edges; no triangle components.
  std::vector<std::array<int, 2>> ends(tri.edge_classes, {-1, -1});
  std::vector<int> deg(tri.vertex_classes, 0);
  std::vector<int> link;
  for (int c = 0; c < tri.edge_classes; ++c)
    if (tri.edge_marked[c]) {
      ends[c] = tri.edge_ends(c);
      ++deg[ends[c][0]];
      ++deg[ends[c][1]];
      link.push_back(c);
    }
  for (int v = 0; v < tri.vertex_classes; ++v)
    if (deg[v] != 0 && deg[v] != 2)
      out.push_back({"link is not a union of disjoint cycles",
                     "vertex class " + std::to_string(v)});
  UnionFind comp(tri.vertex_classes);
  for (int c : link) comp.unite(ends[c][0], ends[c][1]);
  std::map<int, int> edges_in;
  for (int c : link) ++edges_in[comp.find(ends[c][0])];
  for (auto [root, n] : edges_in)
    if (n == 3)
      out.push_back({"triangle component",
                     "link component at vertex class " + std::to_string(root)});

  // Explicit knots must be closed edge cycles covering exactly the link.
  std::set<int> knot_edges;
  for (std::size_t k = 0; k < tri.knots.size(); ++k) {
    const auto& cyc = tri.knots[k];
    std::string where = "knot " + std::to_string(k);
    std::vector<std::array<int, 2>> ve;
    bool ok = !cyc.empty();
    for (auto [i, u, v] : cyc) {
      if (i < 0 || i >= tri.t || u < 0 || u > 3 || v < 0 || v > 3 || u == v) {
        ok = false;
        break;
      }
      int c = tri.eclass[i][edge_index(u, v)];
      if (!knot_edges.insert(c).second) {
        out.push_back({"knot repeats an edge", where});
        ok = false;
      }
      ve.push_back({tri.vclass[i][u], tri.vclass[i][v]});
    }
    if (!ok) {
      out.push_back({"malformed knot", where});
      continue;
    }
    // Orient the first edge to meet the second, then walk.
    std::size_t n = ve.size();
    bool closed = true;
    if (n > 1) {
      int cur = (ve[0][1] == ve[1][0] || ve[0][1] == ve[1][1]) ? ve[0][1]
                                                               : ve[0][0];
      int start = cur == ve[0][1] ? ve[0][0] : ve[0][1];
      for (std::size_t j = 1; j < n && closed; ++j) {
        if (ve[j][0] == cur) cur = ve[j][1];
        else if (ve[j][1] == cur) cur = ve[j][0];
        else closed = false;
      }
      closed = closed && cur == start;
    } else {
      closed = ve[0][0] == ve[0][1];
    }
    if (!closed) out.push_back({"knot is not a closed edge cycle", where});
  }
  if (!tri.knots.empty()) {
    std::set<int> marked(link.begin(), link.end());
    if (marked != knot_edges)
      out.push_back({"knot edges disagree with marked edges", "knot"});
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Token {
  std::string text;
  int col;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
           line[j] != '#')
      ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

[[noreturn]] void fail(int line, int col, const std::string& msg) {
  throw InputError("line " + std::to_string(line) + " col " +
                   std::to_string(col) + ": " + msg);
}

int to_int(const Token& t, int line, int lo, int hi) {
  int v = 0;
  std::size_t used = 0;
  try {
    v = std::stoi(t.text, &used);
  } catch (...) {
    fail(line, t.col, "expected an integer, got '" + t.text + "'");
  }
  if (used != t.text.size())
    fail(line, t.col, "expected an integer, got '" + t.text + "'");
  if (v < lo || v > hi)
    fail(line, t.col, "value " + t.text + " out of range [" +
                          std::to_string(lo) + "," + std::to_string(hi) + "]");
  return v;
}

}  // namespace

MarkedTriangulation parse_triangulation(const std::string& text) {
  MarkedTriangulation tri;
  std::istringstream in(text);
  std::string raw;
  int ln = 0;
  bool have_tets = false;
  while (std::getline(in, raw)) {
    ++ln;
    auto tok = tokenize(raw);
    if (tok.empty()) continue;
    const std::string& kw = tok[0].text;
    auto want = [&](std::size_t n) {
      if (tok.size() != n)
        fail(ln, tok[0].col, "'" + kw + "' expects " + std::to_string(n - 1) +
                                 " arguments");
    };
    if (!have_tets) {
      if (kw != "tets") fail(ln, tok[0].col, "expected 'tets' first");
      want(2);
      tri.t = to_int(tok[1], ln, 1, 1 << 20);
      tri.glue.assign(tri.t, {});
      have_tets = true;
      continue;
    }
    int T = tri.t - 1;
    if (kw == "tets") {
      fail(ln, tok[0].col, "duplicate 'tets'");
    } else if (kw == "glue") {
      want(8);
      int i = to_int(tok[1], ln, 0, T), f = to_int(tok[2], ln, 0, 3);
      int j = to_int(tok[3], ln, 0, T), g = to_int(tok[4], ln, 0, 3);
      std::array<int, 3> img{to_int(tok[5], ln, 0, 3), to_int(tok[6], ln, 0, 3),
                             to_int(tok[7], ln, 0, 3)};
      std::array<int, 4> perm{};
      auto fv = face_vertices(f);
      for (int k = 0; k < 3; ++k) perm[fv[k]] = img[k];
      perm[f] = g;
      auto s = perm;
      std::sort(s.begin(), s.end());
      if (s != std::array<int, 4>{0, 1, 2, 3})
        fail(ln, tok[4].col, "vertex images must be the three vertices of face " +
                                 std::to_string(g));
      if (i == j && f == g) fail(ln, tok[1].col, "face glued to itself");
      std::array<int, 4> inv{};
      for (int v = 0; v < 4; ++v) inv[perm[v]] = v;
      Gluing fwd{j, perm}, bwd{i, inv};
      if ((tri.glue[i][f] && *tri.glue[i][f] != fwd) ||
          (tri.glue[j][g] && *tri.glue[j][g] != bwd))
        fail(ln, tok[0].col, "conflicting gluing");
      tri.glue[i][f] = fwd;
      tri.glue[j][g] = bwd;
    } else if (kw == "mark") {
      if (tok.size() < 2) fail(ln, tok[0].col, "'mark' needs 'edge' or 'vertex'");
      if (tok[1].text == "edge") {
        want(5);
        int i = to_int(tok[2], ln, 0, T), u = to_int(tok[3], ln, 0, 3),
            v = to_int(tok[4], ln, 0, 3);
        if (u == v) fail(ln, tok[4].col, "edge endpoints must differ");
        tri.edge_marks.push_back({i, std::min(u, v), std::max(u, v)});
      } else if (tok[1].text == "vertex") {
        want(4);
        tri.vertex_marks.push_back(
            {to_int(tok[2], ln, 0, T), to_int(tok[3], ln, 0, 3)});
      } else {
        fail(ln, tok[1].col, "unknown mark kind '" + tok[1].text + "'");
      }
    } else if (kw == "knot") {
      if (tok.size() < 4 || (tok.size() - 1) % 3 != 0)
        fail(ln, tok[0].col, "'knot' expects triples <tet> <u> <v>");
      std::vector<std::array<int, 3>> cyc;
      for (std::size_t k = 1; k < tok.size(); k += 3) {
        int i = to_int(tok[k], ln, 0, T), u = to_int(tok[k + 1], ln, 0, 3),
            v = to_int(tok[k + 2], ln, 0, 3);
        if (u == v) fail(ln, tok[k + 2].col, "edge endpoints must differ");
        cyc.push_back({i, std::min(u, v), std::max(u, v)});
      }
      tri.knots.push_back(std::move(cyc));
    } else {
      fail(ln, tok[0].col, "unknown keyword '" + kw + "'");
    }
  }
  if (!have_tets) throw InputError("line 1 col 1: missing 'tets'");
  auto bad = validate_marking(tri);
  if (!bad.empty()) {
    std::string msg;
    for (const auto& b : bad)
      msg += (msg.empty() ? "" : "; ") + b.kind + " (" + b.where + ")";
    throw InputError(msg);
  }
  return tri;
}

MarkedTriangulation load_triangulation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_triangulation(ss.str());
}

std::string serialize(const MarkedTriangulation& tri) {
  std::ostringstream out;
  out << "tets " << tri.t << "\n";
  for (int i = 0; i < tri.t; ++i)
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.glue[i][f];
      if (!g) continue;
      int gf = g->perm[f];
      if (std::pair(g->tet, gf) < std::pair(i, f)) continue;
      out << "glue " << i << ' ' << f << ' ' << g->tet << ' ' << gf;
      for (int v : face_vertices(f)) out << ' ' << g->perm[v];
      out << "\n";
    }
  std::vector<char> seen_e(tri.edge_classes, 0), endpoint(tri.vertex_classes, 0);
  for (int i = 0; i < tri.t; ++i)
    for (int e = 0; e < 6; ++e) {
      int c = tri.eclass[i][e];
      if (!tri.edge_marked[c]) continue;
      endpoint[tri.vclass[i][kEdges[e][0]]] = 1;
      endpoint[tri.vclass[i][kEdges[e][1]]] = 1;
      if (seen_e[c]) continue;
      seen_e[c] = 1;
      out << "mark edge " << i << ' ' << kEdges[e][0] << ' ' << kEdges[e][1]
          << "\n";
    }
  std::vector<char> seen_v(tri.vertex_classes, 0);
  for (int i = 0; i < tri.t; ++i)
    for (int v = 0; v < 4; ++v) {
      int c = tri.vclass[i][v];
      if (!tri.vertex_marked[c] || endpoint[c] || seen_v[c]) continue;
      seen_v[c] = 1;
      out << "mark vertex " << i << ' ' << v << "\n";
    }
  for (const auto& k : tri.knots) {
    out << "knot";
    for (auto [i, u, v] : k) out << ' ' << i << ' ' << u << ' ' << v;
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------

int TruncatedTriangulation::rectangle_count() const {
  int n = 0;
  for (const auto& c : cells) n += static_cast<int>(c.rectangles.size());
  return n;
}

TruncatedTriangulation truncate(const MarkedTriangulation& tri) {
  TruncatedTriangulation out;
  out.source = &tri;
  for (int i = 0; i < tri.t; ++i) {
    TruncatedCell cell;
    cell.marking = tri.marking[i];
    cell.type = classify_marked_tetrahedron(cell.marking);
    for (int e = 0; e < 6; ++e)
      if (cell.marking.edge(e)) {
        cell.rectangles.push_back(e);
        cell.end_triangles.push_back({e, kEdges[e][0]});
        cell.end_triangles.push_back({e, kEdges[e][1]});
      }
    for (int v = 0; v < 4; ++v)
      if (cell.marking.isolated(v)) cell.vertex_triangles.push_back(v);
    out.cells.push_back(std::move(cell));
  }
  return out;
}

}  // namespace twistnf
