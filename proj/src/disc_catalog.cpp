#include "twistnf/disc_catalog.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <mutex>
#include <set>

namespace twistnf {

namespace {

constexpr int kMaxStations = 8;

bool loc_in_face(const Loc& l, int f) {
  if (l.at_vertex) return face_has_vertex(f, l.id);
  return face_has_edge(f, l.id);
}

bool on_edge(int v, int e) { return kEdges[e][0] == v || kEdges[e][1] == v; }

bool normal_arc(const Loc& a, const Loc& b, int f) {
  if (!loc_in_face(a, f) || !loc_in_face(b, f)) return false;
  if (a.at_vertex && b.at_vertex) return a.id != b.id;
  if (a.at_vertex) return !on_edge(a.id, b.id);
  if (b.at_vertex) return !on_edge(b.id, a.id);
  return a.id != b.id;
}

// Position on the boundary circle of face f (a<b<c), walking
// a, ab, b, bc, c, ca. `param` orders points along an edge from its lower
// endpoint; it is negated on ca, which the walk traverses backwards.
std::pair<int, int> circ_pos(const Loc& l, int f, int param) {
  auto fv = face_vertices(f);
  if (l.at_vertex) {
    for (int k = 0; k < 3; ++k)
      if (fv[k] == l.id) return {2 * k, 0};
  }
  int ab = edge_index(fv[0], fv[1]), bc = edge_index(fv[1], fv[2]);
  if (l.id == ab) return {1, param};
  if (l.id == bc) return {3, param};
  return {5, -param};
}

using Pos = std::pair<int, int>;

bool chords_cross(Pos p0, Pos p1, Pos q0, Pos q1) {
  if (p0 == q0 || p0 == q1 || p1 == q0 || p1 == q1) return true;
  if (p1 < p0) std::swap(p0, p1);
  auto inside = [&](Pos x) { return p0 < x && x < p1; };
  return inside(q0) != inside(q1);
}

class Enumerator {
 public:
  Enumerator(const TetrahedronMarking& m, const std::vector<Station>& st,
             const DiscCatalog& cat)
      : m_(m), st_(st), cat_(cat) {
    for (std::size_t i = 0; i < st_.size(); ++i) ends_.push_back(cat_.ends(int(i)));
  }

  std::set<std::vector<Step>> run_from(int s0, int ie0, int oe0) const {
    std::set<std::vector<Step>> out;
    std::vector<Step> seq{{std::int16_t(s0), std::int8_t(ie0), std::int8_t(oe0), -1}};
    std::vector<char> used(st_.size(), 0);
    used[s0] = 1;
    dfs(seq, used, vertices_of(s0), s0, ie0, out);
    return out;
  }

  bool check(const std::vector<Step>& seq, bool closed) const {
    const int L = static_cast<int>(seq.size());
    // arcs meeting at a station lie in different faces
    for (int i = 0; i < (closed ? L : L - 1); ++i) {
      if (!closed && i == 0) continue;
      if (seq[(i + L - 1) % L].face == seq[i].face) return false;
    }
    std::uint8_t onv = 0;
    for (const Step& s : seq) onv |= vertices_of(s.station);
    for (int e = 0; e < 6; ++e) {
      int interior = -1, n_interior = 0;
      for (const Step& s : seq) {
        const Station& x = st_[s.station];
        if (x.kind != Station::Vertex && x.id == e) {
          interior = s.station;
          ++n_interior;
        }
      }
      if (n_interior > 1) return false;
      std::uint8_t got = 0;
      for (int k = 0; k < 2; ++k)
        if ((onv >> kEdges[e][k]) & 1) got |= 1 << k;
      if (m_.edge(e)) {
        if (interior >= 0) {
          std::uint8_t need = 0;
          switch (st_[interior].kind) {
            case Station::Full: need = 3; break;
            case Station::Exterior0: need = 1; break;
            case Station::Exterior1: need = 2; break;
            default: need = 0;
          }
          if (got != need) return false;
        } else if (got == 3) {
          return false;
        }
      } else if (interior >= 0 && got) {
        return false;
      }
    }
    std::array<std::vector<std::pair<Loc, Loc>>, 4> chords;
    for (int i = 0; i < (closed ? L : L - 1); ++i) {
      const Step& s = seq[i];
      const Step& n = seq[(i + 1) % L];
      chords[s.face].push_back({ends_[s.station][s.out_end], ends_[n.station][n.in_end]});
    }
    for (int f = 0; f < 4; ++f) {
      const auto& cs = chords[f];
      for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
          if (chords_cross(circ_pos(cs[i].first, f, cs[i].first.slot),
                           circ_pos(cs[i].second, f, cs[i].second.slot),
                           circ_pos(cs[j].first, f, cs[j].first.slot),
                           circ_pos(cs[j].second, f, cs[j].second.slot)))
            return false;
    }
    return true;
  }

  std::vector<Step> canon(std::vector<Step> seq) const {
    const std::size_t L = seq.size();
    for (Step& s : seq)
      if (!st_[s.station].is_arc()) s.in_end = s.out_end = 0;
    std::vector<Step> rev(L);
    for (std::size_t i = 0; i < L; ++i) {
      const Step& s = seq[L - 1 - i];
      rev[i] = {s.station, s.out_end, s.in_end, seq[(2 * L - 2 - i) % L].face};
    }
    std::vector<Step> best = seq, cand(L);
    for (const auto* base : {&seq, &rev})
      for (std::size_t r = 0; r < L; ++r) {
        for (std::size_t i = 0; i < L; ++i) cand[i] = (*base)[(r + i) % L];
        if (cand < best) best = cand;
      }
    return best;
  }

 private:
  std::uint8_t vertices_of(int x) const {
    std::uint8_t s = 0;
    for (const Loc& l : ends_[x])
      if (l.at_vertex) s |= 1 << l.id;
    return s;
  }

  static std::vector<std::pair<int, int>> orientations(const Station& s) {
    if (s.is_arc()) return {{0, 1}, {1, 0}};
    return {{0, 1}};
  }

  void dfs(std::vector<Step>& seq, std::vector<char>& used, std::uint8_t vused, int s0,
           int ie0, std::set<std::vector<Step>>& out) const {
    Step last = seq.back();
    const Loc a = ends_[last.station][last.out_end];
    const Loc b0 = ends_[s0][ie0];
    for (int f = 0; f < 4; ++f) {
      seq.back().face = static_cast<std::int8_t>(f);
      if (normal_arc(a, b0, f) && !(seq.size() == 1 && !st_[s0].is_arc()) &&
          check(seq, true))
        out.insert(canon(seq));
      if (static_cast<int>(seq.size()) >= kMaxStations) continue;
      for (int y = s0 + 1; y < static_cast<int>(st_.size()); ++y) {
        if (used[y]) continue;
        std::uint8_t vy = vertices_of(y);
        if (vy & vused) continue;
        for (auto [ie, oe] : orientations(st_[y])) {
          if (!normal_arc(a, ends_[y][ie], f)) continue;
          seq.push_back({std::int16_t(y), std::int8_t(ie), std::int8_t(oe), -1});
          if (check(seq, false)) {
            used[y] = 1;
            dfs(seq, used, vused | vy, s0, ie0, out);
            used[y] = 0;
          }
          seq.pop_back();
        }
      }
    }
    seq.back() = last;
  }

  const TetrahedronMarking& m_;
  const std::vector<Station>& st_;
  const DiscCatalog& cat_;
  std::vector<std::vector<Loc>> ends_;
};

std::string step_token(const Station& s, const Step& p) {
  std::string t = s.str();
  if (s.is_arc()) t += p.in_end == 0 ? "+" : "-";
  return t + "@" + std::to_string(p.face);
}

const char* shape_name(int sides) {
  switch (sides) {
    case 2: return "bigon";
    case 3: return "triangle";
    case 4: return "quad";
    case 5: return "pent";
    case 6: return "hex";
  }
  return "polygon";
}

std::string family_of(const DiscCatalog& cat, const TwistedDiscType& d) {
  int n_vertex = 0;
  std::set<int> arc_edges;
  Station::Kind arc_kind = Station::Full;
  for (const Step& s : d.steps) {
    const Station& x = cat.stations[s.station];
    if (x.kind == Station::Vertex) ++n_vertex;
    if (x.is_arc()) {
      arc_edges.insert(x.id);
      arc_kind = x.kind;
    }
  }
  if (arc_edges.size() >= 2) return std::string("both-edges-") + shape_name(d.sides);
  if (arc_edges.size() == 1) {
    const char* k = arc_kind == Station::Full       ? "full"
                    : arc_kind == Station::Interior ? "int"
                                                    : "ext";
    return std::string(k) + "-" + shape_name(d.sides);
  }
  switch (n_vertex) {
    case 0: return d.sides == 3 ? "triangle" : "quad";
    case 1: return "vertex-touching";
    case 2: return d.sides == 2 ? "bigon" : "triangle-one-vv";
    case 3: return "triangle-all-vv";
    default: return "quad-all-vv";
  }
}

// Restriction of a twisted boundary to the truncated cell: the cyclic
// sequence of complex sides crossed, with immediate backtracks removed.
std::vector<Token> restrict_to_cell(const DiscCatalog& cat, const std::vector<Step>& seq) {
  const TetrahedronMarking& m = cat.marking;
  std::vector<Token> toks;
  const std::size_t L = seq.size();
  for (std::size_t i = 0; i < L; ++i) {
    const Step& s = seq[i];
    int fin = seq[(i + L - 1) % L].face, fout = s.face;
    const Station& x = cat.stations[s.station];
    switch (x.kind) {
      case Station::Point: toks.push_back(Token::edge_remnant(x.id)); break;
      case Station::Vertex: {
        int e = m.marked_edge_at(x.id);
        if (e >= 0) {
          toks.push_back(Token::rect(fin, e));
          toks.push_back(Token::rect(fout, e));
        } else {
          toks.push_back(Token::tri(fin, x.id));
          toks.push_back(Token::tri(fout, x.id));
        }
        break;
      }
      default:
        toks.push_back(Token::rect(fin, x.id));
        toks.push_back(Token::rect(fout, x.id));
    }
  }
  for (bool changed = true; changed && toks.size() > 1;) {
    changed = false;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      std::size_t j = (i + 1) % toks.size();
      if (toks[i] == toks[j]) {
        std::vector<Token> next;
        for (std::size_t k = 0; k < toks.size(); ++k)
          if (k != i && k != j) next.push_back(toks[k]);
        toks.swap(next);
        changed = true;
        break;
      }
    }
  }
  if (toks.empty()) throw std::logic_error("disc boundary restricts to nothing");
  const std::size_t n = toks.size();
  std::vector<Token> rev(toks.rbegin(), toks.rend());
  std::vector<Token> best = toks, cand(n);
  for (const auto* base : {&toks, &rev})
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t i = 0; i < n; ++i) cand[i] = (*base)[(r + i) % n];
      if (cand < best) best = cand;
    }
  return best;
}

void describe_pieces(const BoundaryComplex& cx, NormalDiscType& d) {
  const std::size_t n = d.tokens.size();
  for (const Token& t : d.tokens)
    if (t.kind == Token::Edge) d.edge_points.push_back(t.edge);
  if (n < 2) return;
  for (std::size_t i = 0; i < n; ++i) {
    const Token& a = d.tokens[i];
    const Token& b = d.tokens[(i + 1) % n];
    int sa = cx.side_of(a), sb = cx.side_of(b);
    int c = cx.common_cell(sa, sb);
    if (c < 0) throw std::logic_error("consecutive sides share no cell: " + a.str() + " " + b.str());
    const auto& cell = cx.cells()[c];
    switch (cell.kind) {
      case BoundaryComplex::CellKind::Face: {
        FaceArc fa{cell.id, cx.face_side(a, cell.id), cx.face_side(b, cell.id)};
        if (fa.b < fa.a) std::swap(fa.a, fa.b);
        d.face_arcs.push_back(fa);
        break;
      }
      case BoundaryComplex::CellKind::Rect: {
        bool la = cx.rect_side(a) == RectSide::Long, lb = cx.rect_side(b) == RectSide::Long;
        RectArc r{cell.id, RectCrossing::Meridional};
        if (!la && !lb) r.kind = RectCrossing::Longitudinal;
        else if (la != lb) {
          r.kind = RectCrossing::Corner;
          r.long_face = la ? a.face : b.face;
          r.end = cx.rect_end(la ? b : a);
        }
        d.rect_arcs.push_back(r);
        break;
      }
      case BoundaryComplex::CellKind::Tri:
        d.tri_arcs.push_back({cell.id, a.face, b.face});
        break;
    }
  }
  std::sort(d.face_arcs.begin(), d.face_arcs.end());
}

std::string join_tokens(const std::vector<Token>& t) {
  std::string s;
  for (const Token& x : t) s += (s.empty() ? "" : ",") + x.str();
  return s;
}

}  // namespace

std::string Station::str() const {
  switch (kind) {
    case Vertex: return "V" + std::to_string(id);
    case Point: return "P" + edge_name(id);
    case Full: return "A" + edge_name(id) + "f";
    case Interior: return "A" + edge_name(id) + "i";
    case Exterior0: return "A" + edge_name(id) + "x0";
    case Exterior1: return "A" + edge_name(id) + "x1";
  }
  return "?";
}

std::vector<Loc> DiscCatalog::ends(int station) const {
  const Station& s = stations[station];
  auto V = [](int v) { return Loc{true, std::int8_t(v), 0}; };
  auto P = [&](int slot) { return Loc{false, s.id, std::int8_t(slot)}; };
  switch (s.kind) {
    case Station::Vertex: return {V(s.id), V(s.id)};
    case Station::Point: return {P(0), P(0)};
    case Station::Full: return {V(kEdges[s.id][0]), V(kEdges[s.id][1])};
    case Station::Interior: return {P(0), P(1)};
    case Station::Exterior0: return {V(kEdges[s.id][0]), P(1)};
    case Station::Exterior1: return {P(0), V(kEdges[s.id][1])};
  }
  return {};
}

std::string DiscCatalog::describe(const std::vector<Step>& steps) const {
  std::string out;
  for (const Step& s : steps)
    out += (out.empty() ? "" : ",") + step_token(stations[s.station], s);
  return out;
}

DiscCatalog build_catalog(const TetrahedronMarking& m, Exec exec) {
  if (auto v = marking_violations(m); !v.empty()) throw InputError(v.front());
  DiscCatalog cat;
  cat.marking = m;
  for (int v = 0; v < 4; ++v)
    if (m.vertex(v)) cat.stations.push_back({Station::Vertex, std::int8_t(v)});
  for (int e = 0; e < 6; ++e) {
    if (m.edge(e)) {
      for (auto k : {Station::Full, Station::Interior, Station::Exterior0, Station::Exterior1})
        cat.stations.push_back({k, std::int8_t(e)});
    } else {
      cat.stations.push_back({Station::Point, std::int8_t(e)});
    }
  }
  cat.complex = std::make_unique<BoundaryComplex>(m);

  Enumerator en(m, cat.stations, cat);
  std::vector<std::array<int, 3>> starts;
  for (int s = 0; s < static_cast<int>(cat.stations.size()); ++s) {
    starts.push_back({s, 0, 1});
    if (cat.stations[s].is_arc()) starts.push_back({s, 1, 0});
  }
  std::vector<std::set<std::vector<Step>>> found(starts.size());
  const int ns = static_cast<int>(starts.size());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < ns; ++i) found[i] = en.run_from(starts[i][0], starts[i][1], starts[i][2]);
  } else {
    for (int i = 0; i < ns; ++i) found[i] = en.run_from(starts[i][0], starts[i][1], starts[i][2]);
  }
  std::set<std::vector<Step>> all;
  for (auto& f : found) all.insert(f.begin(), f.end());

  for (const auto& steps : all) {
    TwistedDiscType d;
    d.steps = steps;
    d.encoding = cat.describe(steps);
    d.sides = static_cast<int>(steps.size());
    for (const Step& s : steps) {
      const Station& x = cat.stations[s.station];
      if (x.is_arc()) {
        ++d.sides;
        d.arc_edges |= 1 << x.id;
      }
      for (const Loc& l : cat.ends(s.station))
        if (l.at_vertex) d.vertices_used |= 1 << l.id;
    }
    cat.twisted.push_back(std::move(d));
  }
  std::sort(cat.twisted.begin(), cat.twisted.end(),
            [](const auto& a, const auto& b) { return a.encoding < b.encoding; });
  for (auto& d : cat.twisted) d.family = family_of(cat, d);

  std::map<std::string, std::vector<Token>> images;
  std::vector<std::string> image_of;
  for (const auto& d : cat.twisted) {
    auto toks = restrict_to_cell(cat, d.steps);
    auto key = join_tokens(toks);
    images.emplace(key, std::move(toks));
    image_of.push_back(key);
  }
  std::map<std::string, int> index;
  for (auto& [key, toks] : images) {
    NormalDiscType n;
    n.tokens = toks;
    n.encoding = key;
    describe_pieces(*cat.complex, n);
    index[key] = static_cast<int>(cat.normal.size());
    cat.normal.push_back(std::move(n));
  }
  for (std::size_t i = 0; i < cat.twisted.size(); ++i) {
    int j = index.at(image_of[i]);
    cat.twisted[i].normal_image = j;
    cat.normal[j].preimages.push_back(static_cast<int>(i));
  }
  return cat;
}

const DiscCatalog& catalog_for(const TetrahedronMarking& m) {
  static std::mutex mu;
  static std::map<TetrahedronMarking, std::unique_ptr<DiscCatalog>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[m];
  if (!slot) slot = std::make_unique<DiscCatalog>(build_catalog(m));
  return *slot;
}

const DiscCatalog& catalog_for(TetType t) { return catalog_for(canonical_marking(t)); }

const std::vector<TwistedDiscType>& enumerate_twisted_discs(TetType t) {
  return catalog_for(t).twisted;
}

const std::vector<NormalDiscType>& truncate_disc_types(TetType t) {
  return catalog_for(t).normal;
}

namespace {

const std::set<std::string>& plain_families() {
  static const std::set<std::string> s{"triangle",        "quad",           "vertex-touching",
                                       "bigon",           "triangle-one-vv", "triangle-all-vv",
                                       "quad-all-vv"};
  return s;
}

bool family_matches(const std::string& family, const std::string& name) {
  if (family == name) return true;
  if (plain_families().count(name)) return false;
  return family.rfind(name + "-", 0) == 0;
}

bool known_family(const std::string& name) {
  if (plain_families().count(name)) return true;
  for (std::string k : {"full", "int", "ext", "both-edges"}) {
    if (name == k) return true;
    if (name.rfind(k + "-", 0) != 0) continue;
    std::string shape = name.substr(k.size() + 1);
    for (int s = 2; s <= 6; ++s)
      if (shape == shape_name(s)) return true;
  }
  return false;
}

}  // namespace

std::vector<int> family_members(TetType t, const std::string& family) {
  std::string name = family;
  bool only_new = false;
  if (auto p = name.find(':'); p != std::string::npos) {
    if (name.substr(p) != ":new") throw InputError("unknown family qualifier: " + family);
    name = name.substr(0, p);
    only_new = true;
  }
  if (!known_family(name)) throw InputError("unknown family: " + family);
  const auto& cat = catalog_for(t);
  std::uint8_t iso = cat.marking.isolated_vertices();
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(cat.twisted.size()); ++i) {
    const auto& d = cat.twisted[i];
    if (!family_matches(d.family, name)) continue;
    if (only_new) {
      if ((d.vertices_used & iso) != iso) continue;
      if (cat.marking.edge_count() == 2 && d.arc_edges != cat.marking.edges) continue;
    }
    out.push_back(i);
  }
  return out;
}

int subcount(TetType t, const std::string& family) {
  return static_cast<int>(family_members(t, family).size());
}

std::vector<std::string> family_names(TetType t) {
  std::set<std::string> s;
  for (const auto& d : catalog_for(t).twisted) s.insert(d.family);
  return {s.begin(), s.end()};
}

namespace {

template <class Pred>
int max_arc_count(TetType t, Pred keep) {
  std::map<FaceArc, int> count;
  for (const auto& n : catalog_for(t).normal) {
    std::set<FaceArc> distinct(n.face_arcs.begin(), n.face_arcs.end());
    for (const auto& a : distinct)
      if (keep(a)) ++count[a];
  }
  int best = 0;
  for (const auto& [a, c] : count) best = std::max(best, c);
  return best;
}

}  // namespace

int max_common_arc_count(TetType t) {
  return max_arc_count(t, [](const FaceArc&) { return true; });
}

int max_edge_arc_count(TetType t) {
  const auto m = canonical_marking(t);
  auto plain = [&](const FaceSide& s) { return s.kind == FaceSide::EdgeSide && !m.edge(s.id); };
  return max_arc_count(t, [&](const FaceArc& a) { return plain(a.a) && plain(a.b); });
}

int sides(const TwistedDiscType& d) { return d.sides; }

std::vector<std::array<int, 3>> fan_triangulation(const TwistedDiscType& d) {
  // A bigon is subdivided on one side so that it is a genuine triangle.
  if (d.sides <= 2) return {{0, 1, 2}};
  std::vector<std::array<int, 3>> out;
  for (int i = 1; i + 1 < d.sides; ++i) out.push_back({0, i, i + 1});
  return out;
}

FaceCurveClass classify_face_arc(int face, ArcEnd a, ArcEnd b, const TetrahedronMarking& m) {
  for (const ArcEnd& x : {a, b}) {
    if (x.kind == ArcEnd::InFace) throw InputError("arc endpoint in face interior");
    bool ok = x.kind == ArcEnd::AtVertex ? (x.id >= 0 && x.id < 4 && face_has_vertex(face, x.id))
                                         : (x.id >= 0 && x.id < 6 && face_has_edge(face, x.id));
    if (!ok) throw InputError("arc endpoint not on the boundary of face " + std::to_string(face));
  }
  if (a.kind == ArcEnd::AtVertex && b.kind == ArcEnd::AtVertex) {
    if (a.id == b.id) return m.vertex(a.id) ? FaceCurveClass::Monogon : FaceCurveClass::DCurve;
    return m.vertex(a.id) && m.vertex(b.id) ? FaceCurveClass::Normal : FaceCurveClass::DCurve;
  }
  if (a.kind == ArcEnd::AtVertex || b.kind == ArcEnd::AtVertex) {
    const ArcEnd& v = a.kind == ArcEnd::AtVertex ? a : b;
    const ArcEnd& e = a.kind == ArcEnd::AtVertex ? b : a;
    return m.vertex(v.id) && !on_edge(v.id, e.id) ? FaceCurveClass::Normal
                                                  : FaceCurveClass::DCurve;
  }
  return a.id != b.id ? FaceCurveClass::Normal : FaceCurveClass::DCurve;
}

bool twisted_compatible(const DiscCatalog& cat, int i, int j) {
  if (i == j) return true;
  const auto& di = cat.twisted[i];
  const auto& dj = cat.twisted[j];
  if (di.vertices_used & dj.vertices_used) return false;

  // Per edge: the station each curve has there (at most one each).
  std::array<std::array<int, 2>, 6> feat;
  for (auto& f : feat) f = {-1, -1};
  const TwistedDiscType* ds[2] = {&di, &dj};
  for (int c = 0; c < 2; ++c)
    for (const Step& s : ds[c]->steps) {
      const Station& x = cat.stations[s.station];
      if (x.kind != Station::Vertex) feat[x.id][c] = s.station;
    }
  // Which curve's feature comes first along a shared edge: 0 = curve 0,
  // 1 = curve 1, 2 = free, -1 = impossible.
  std::vector<int> shared;
  std::array<int, 6> forced{};
  for (int e = 0; e < 6; ++e) {
    forced[e] = 2;
    if (feat[e][0] < 0 || feat[e][1] < 0) continue;
    auto k0 = cat.stations[feat[e][0]].kind, k1 = cat.stations[feat[e][1]].kind;
    if (k0 == Station::Full || k1 == Station::Full) return false;
    bool a0 = k0 == Station::Exterior0, a1 = k1 == Station::Exterior0;
    bool b0 = k0 == Station::Exterior1, b1 = k1 == Station::Exterior1;
    if ((a0 && a1) || (b0 && b1)) return false;
    if (a0 || b1) forced[e] = 0;
    else if (a1 || b0) forced[e] = 1;
    else shared.push_back(e);
  }
  const int k = static_cast<int>(shared.size());
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::array<int, 6> first = forced;
    for (int b = 0; b < k; ++b) first[shared[b]] = (mask >> b) & 1;
    std::array<std::vector<std::pair<Pos, Pos>>, 4> chords[2];
    for (int c = 0; c < 2; ++c) {
      const auto& seq = ds[c]->steps;
      const std::size_t L = seq.size();
      for (std::size_t q = 0; q < L; ++q) {
        const Step& s = seq[q];
        const Step& n = seq[(q + 1) % L];
        Loc la = cat.ends(s.station)[s.out_end];
        Loc lb = cat.ends(n.station)[n.in_end];
        auto param = [&](const Loc& l) {
          if (l.at_vertex) return 0;
          int offset = first[l.id] == 2 || first[l.id] == c ? 0 : 2;
          return l.slot + offset;
        };
        chords[c][s.face].push_back(
            {circ_pos(la, s.face, param(la)), circ_pos(lb, s.face, param(lb))});
      }
    }
    bool ok = true;
    for (int f = 0; f < 4 && ok; ++f)
      for (const auto& p : chords[0][f])
        for (const auto& q : chords[1][f])
          if (chords_cross(p.first, p.second, q.first, q.second)) ok = false;
    if (ok) return true;
  }
  return false;
}

bool normal_compatible(const DiscCatalog& cat, int i, int j) {
  if (i == j) return true;
  const BoundaryComplex& cx = *cat.complex;
  const NormalDiscType* ds[2] = {&cat.normal[i], &cat.normal[j]};
  std::vector<std::vector<int>> on_side(2, std::vector<int>(cx.sides().size(), 0));
  for (int c = 0; c < 2; ++c)
    for (const Token& t : ds[c]->tokens)
      if (++on_side[c][cx.side_of(t)] > 1)
        throw std::logic_error("normal disc crosses a side twice: " + ds[c]->encoding);
  std::vector<int> shared;
  for (std::size_t s = 0; s < cx.sides().size(); ++s)
    if (on_side[0][s] && on_side[1][s]) shared.push_back(static_cast<int>(s));
  const int k = static_cast<int>(shared.size());
  std::vector<int> bit_of(cx.sides().size(), -1);
  for (int b = 0; b < k; ++b) bit_of[shared[b]] = b;

  // Position of a crossing of side s on the boundary walk of cell c.
  auto pos = [&](int cell, int s, int rank) -> Pos {
    const auto& cl = cx.cells()[cell];
    for (std::size_t q = 0; q < cl.sides.size(); ++q)
      if (cl.sides[q] == s) return {int(q), cl.forward[q] ? rank : -rank};
    throw std::logic_error("side not on cell");
  };
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<std::vector<std::pair<Pos, Pos>>> chords[2];
    chords[0].resize(cx.cells().size());
    chords[1].resize(cx.cells().size());
    for (int c = 0; c < 2; ++c) {
      const auto& t = ds[c]->tokens;
      const std::size_t n = t.size();
      auto rank = [&](int s) {
        int b = bit_of[s];
        if (b < 0) return 0;
        return ((mask >> b) & 1) == c ? 1 : 2;
      };
      for (std::size_t q = 0; q < n && n > 1; ++q) {
        int sa = cx.side_of(t[q]), sb = cx.side_of(t[(q + 1) % n]);
        int cell = cx.common_cell(sa, sb);
        chords[c][cell].push_back({pos(cell, sa, rank(sa)), pos(cell, sb, rank(sb))});
      }
    }
    bool ok = true;
    for (std::size_t cell = 0; cell < cx.cells().size() && ok; ++cell)
      for (const auto& p : chords[0][cell])
        for (const auto& q : chords[1][cell])
          if (chords_cross(p.first, p.second, q.first, q.second)) ok = false;
    if (ok) return true;
  }
  return false;
}

std::vector<Bucket> two_edge_breakdown() {
  const auto& cat = catalog_for(TetType::TwoEdges);
  int carried = 0, one_vertex_arcfree = 0, edge_and_vertex = 0, both = 0, bigons = 0,
      one_vv = 0;
  for (const auto& d : cat.twisted) {
    int arcs = std::popcount(d.arc_edges);
    int nv = 0;
    for (const Step& s : d.steps) nv += cat.stations[s.station].kind == Station::Vertex;
    if (arcs == 2) ++both;
    else if (arcs == 1 && nv >= 1) ++edge_and_vertex;
    else if (arcs == 0 && nv >= 2) {
      ++one_vertex_arcfree;
      bigons += d.family == "bigon";
      one_vv += d.family == "triangle-one-vv";
    } else ++carried;
  }
  return {
      {"carried over from one marked edge", carried, 21, ""},
      {"carried over from one edge and one vertex", one_vertex_arcfree + edge_and_vertex, 62,
       std::to_string(one_vertex_arcfree) + " arc-free with two vertices (" +
           std::to_string(bigons) + " bigons, " + std::to_string(one_vv) +
           " triangles with one vertex-vertex arc) + " + std::to_string(edge_and_vertex) +
           " with an edge arc and a vertex"},
      {"arcs on both marked edges", both, 66, ""},
  };
}

const std::vector<ReferenceSubcount>& reference_subcounts() {
  using T = TetType;
  static const std::vector<ReferenceSubcount> table{
      {T::Unmarked, "triangle", 4},
      {T::Unmarked, "quad", 3},
      {T::OneVertex, "vertex-touching", 3},
      {T::TwoVertices, "vertex-touching", 6},
      {T::TwoVertices, "bigon", 1},
      {T::TwoVertices, "triangle-one-vv", 2},
      {T::ThreeVertices, "vertex-touching", 9},
      {T::ThreeVertices, "bigon", 3},
      {T::ThreeVertices, "triangle-one-vv", 6},
      {T::ThreeVertices, "triangle-all-vv", 4},
      {T::FourVertices, "vertex-touching", 12},
      {T::FourVertices, "bigon", 6},
      {T::FourVertices, "triangle-one-vv", 12},
      {T::FourVertices, "triangle-all-vv", 16},
      {T::FourVertices, "quad-all-vv", 6},
      {T::OneEdge, "vertex-touching", 6},
      {T::OneEdge, "full-triangle", 1},
      {T::OneEdge, "int-quad", 4},
      {T::OneEdge, "int-pent", 4},
      {T::OneEdge, "ext-quad", 8},
      {T::OneEdge, "ext-pent", 4},
      {T::OneEdgeOneVertex, "vertex-touching:new", 1},
      {T::OneEdgeOneVertex, "bigon:new", 1},
      {T::OneEdgeOneVertex, "full-triangle:new", 3},
      {T::OneEdgeOneVertex, "ext-triangle:new", 2},
      {T::OneEdgeOneVertex, "ext-quad:new", 6},
      {T::OneEdgeOneVertex, "int-quad:new", 4},
      {T::OneEdgeTwoVertices, "bigon:new", 1},
      {T::OneEdgeTwoVertices, "triangle-all-vv:new", 8},
      {T::OneEdgeTwoVertices, "full-quad:new", 4},
      {T::OneEdgeTwoVertices, "ext-quad:new", 12},
      {T::OneEdgeTwoVertices, "int-quad:new", 4},
      {T::TwoEdges, "both-edges:new", 66},
  };
  return table;
}

}  // namespace twistnf
