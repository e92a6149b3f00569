#include "twistnf/moves.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "twistnf/common.hpp"

namespace twistnf {

namespace {

using Edge = std::pair<int, int>;

Edge edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::array<Edge, 3> edges_of(const std::array<int, 3>& t) {
  return {edge(t[0], t[1]), edge(t[1], t[2]), edge(t[0], t[2])};
}

std::map<Edge, int> edge_counts(const DiscComplex& d, const std::vector<char>* alive = nullptr) {
  std::map<Edge, int> c;
  for (int i = 0; i < d.w(); ++i)
    if (!alive || (*alive)[i])
      for (Edge e : edges_of(d.triangles[i])) ++c[e];
  return c;
}

// Cycle through the boundary edges (count 1), or empty if they do not form
// exactly one simple cycle.
std::vector<int> trace_boundary(const std::map<Edge, int>& counts) {
  std::map<int, std::vector<int>> nb;
  std::size_t n_edges = 0;
  for (auto [e, c] : counts)
    if (c == 1) {
      nb[e.first].push_back(e.second);
      nb[e.second].push_back(e.first);
      ++n_edges;
    }
  if (nb.empty()) return {};
  for (auto& [v, l] : nb)
    if (l.size() != 2) return {};
  const int start = nb.begin()->first;
  std::vector<int> cyc{start};
  int prev = start, cur = std::min(nb[start][0], nb[start][1]);
  while (cur != start) {
    cyc.push_back(cur);
    int next = nb[cur][0] == prev ? nb[cur][1] : nb[cur][0];
    prev = cur;
    cur = next;
    if (cyc.size() > n_edges) return {};
  }
  if (cyc.size() != n_edges) return {};
  return cyc;
}

bool same_cycle(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const std::size_t n = a.size();
  for (int dir : {1, -1})
    for (std::size_t r = 0; r < n; ++r) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        long j = (static_cast<long>(r) + dir * static_cast<long>(i)) % static_cast<long>(n);
        ok = a[i] == b[j < 0 ? j + n : j];
      }
      if (ok) return true;
    }
  return false;
}

std::array<int, 3> sorted(std::array<int, 3> t) {
  std::sort(t.begin(), t.end());
  return t;
}

// Index of the first step position i with cyc[i] == v, or -1.
int find(const std::vector<int>& cyc, int v) {
  auto it = std::find(cyc.begin(), cyc.end(), v);
  return it == cyc.end() ? -1 : static_cast<int>(it - cyc.begin());
}

bool adjacent_on(const std::vector<int>& cyc, int a, int b) {
  int i = find(cyc, a);
  if (i < 0) return false;
  const int n = static_cast<int>(cyc.size());
  return cyc[(i + 1) % n] == b || cyc[(i + n - 1) % n] == b;
}

void insert_between(std::vector<int>& cyc, int a, int b, int v) {
  const int n = static_cast<int>(cyc.size());
  int i = find(cyc, a);
  if (cyc[(i + 1) % n] == b) cyc.insert(cyc.begin() + i + 1, v);
  else cyc.insert(cyc.begin() + i, v);
}

bool simple(const std::vector<int>& cyc) {
  std::set<int> s(cyc.begin(), cyc.end());
  return s.size() == cyc.size() && cyc.size() >= 3;
}

}  // namespace

std::optional<std::string> disc_violation(const DiscComplex& d) {
  if (d.w() < 1) return "disc has no triangles";
  std::set<std::array<int, 3>> seen;
  for (const auto& t : d.triangles) {
    if (t[0] < 0 || t[1] < 0 || t[2] < 0) return "negative vertex label";
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) return "degenerate triangle";
    if (!seen.insert(sorted(t)).second) return "repeated triangle";
  }
  auto counts = edge_counts(d);
  for (auto [e, c] : counts)
    if (c > 2)
      return "edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
             " lies in more than two triangles";
  // connectivity across shared edges
  std::map<Edge, std::vector<int>> by_edge;
  for (int i = 0; i < d.w(); ++i)
    for (Edge e : edges_of(d.triangles[i])) by_edge[e].push_back(i);
  std::vector<char> reached(d.w(), 0);
  std::vector<int> stack{0};
  reached[0] = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (Edge e : edges_of(d.triangles[i]))
      for (int j : by_edge[e])
        if (!reached[j]) reached[j] = 1, stack.push_back(j);
  }
  if (std::count(reached.begin(), reached.end(), 1) != d.w()) return "not connected";
  // vertex links must be single paths or cycles
  std::map<int, std::vector<Edge>> link;
  for (const auto& t : d.triangles)
    for (int k = 0; k < 3; ++k) link[t[k]].push_back(edge(t[(k + 1) % 3], t[(k + 2) % 3]));
  for (auto& [v, es] : link) {
    std::map<int, int> deg;
    std::map<int, std::vector<int>> nb;
    for (Edge e : es) {
      ++deg[e.first], ++deg[e.second];
      nb[e.first].push_back(e.second);
      nb[e.second].push_back(e.first);
    }
    for (auto [x, k] : deg)
      if (k > 2) return "vertex " + std::to_string(v) + " is not a manifold point";
    std::set<int> seen_v{deg.begin()->first};
    std::vector<int> st{deg.begin()->first};
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      for (int y : nb[x])
        if (seen_v.insert(y).second) st.push_back(y);
    }
    if (seen_v.size() != deg.size()) return "vertex " + std::to_string(v) + " is a pinch point";
  }
  auto cyc = trace_boundary(counts);
  if (cyc.empty()) return "boundary is not a single cycle";
  long V = static_cast<long>(link.size()), E = static_cast<long>(counts.size());
  if (V - E + d.w() != 1) return "Euler characteristic is not 1";
  return std::nullopt;
}

std::vector<int> boundary_cycle(const DiscComplex& d) { return trace_boundary(edge_counts(d)); }

std::string ElementaryMove::str() const {
  auto tri = [&] {
    return std::to_string(triangle[0]) + " " + std::to_string(triangle[1]) + " " +
           std::to_string(triangle[2]);
  };
  switch (kind) {
    case InsertVertex:
      return "insert " + std::to_string(a) + " " + std::to_string(b) + " " +
             std::to_string(vertex);
    case RemoveVertex: return "remove " + std::to_string(vertex);
    case TriangleSlide: return "slide " + tri();
    case TriangleSlideInverse: return "unslide " + tri();
  }
  return "?";
}

namespace {

// A triangle that can be removed keeping the rest a disc: two boundary edges
// (an ear), or one boundary edge with the opposite vertex interior.
enum class Removal { No, Ear, Notch };

Removal removable(const std::array<int, 3>& t, const std::map<Edge, int>& counts,
                  const std::set<int>& on_boundary) {
  int nb = 0;
  for (Edge e : edges_of(t)) nb += counts.at(e) == 1;
  if (nb == 2) return Removal::Ear;
  if (nb == 1) {
    // the single boundary edge is opposite the vertex whose opposite edge is boundary
    for (int k = 0; k < 3; ++k)
      if (counts.at(edge(t[(k + 1) % 3], t[(k + 2) % 3])) == 1)
        return on_boundary.count(t[k]) ? Removal::No : Removal::Notch;
  }
  return Removal::No;
}

bool shell(const DiscComplex& d, std::vector<char>& alive, int left, std::vector<int>& order,
           long& budget) {
  if (left == 1) {
    for (int i = 0; i < d.w(); ++i)
      if (alive[i]) order.push_back(i);
    return true;
  }
  if (--budget < 0) return false;
  auto counts = edge_counts(d, &alive);
  std::set<int> on_boundary;
  for (auto [e, c] : counts)
    if (c == 1) on_boundary.insert(e.first), on_boundary.insert(e.second);
  for (Removal want : {Removal::Ear, Removal::Notch})
    for (int i = 0; i < d.w(); ++i) {
      if (!alive[i] || removable(d.triangles[i], counts, on_boundary) != want) continue;
      alive[i] = 0;
      order.push_back(i);
      if (shell(d, alive, left - 1, order, budget)) return true;
      order.pop_back();
      alive[i] = 1;
    }
  return false;
}

}  // namespace

std::vector<std::array<int, 3>> shelling_order(const DiscComplex& d) {
  if (auto bad = disc_violation(d)) throw InputError("not a disc: " + *bad);
  std::vector<char> alive(d.w(), 1);
  std::vector<int> order;
  long budget = 64L * d.w() * d.w() + 64;
  if (!shell(d, alive, d.w(), order, budget))
    throw std::logic_error("no shelling found for a valid disc");
  std::vector<std::array<int, 3>> out;
  for (int i : order) out.push_back(d.triangles[i]);
  return out;
}

MoveCertificate collapse_certificate(const DiscComplex& d) {
  auto order = shelling_order(d);
  MoveCertificate c;
  c.initial = boundary_cycle(d);
  std::vector<int> cyc = c.initial;
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    const auto& t = order[k];
    // ear: some vertex of t sits on the curve between the other two
    bool done = false;
    for (int j = 0; j < 3 && !done; ++j) {
      int y = t[j], x = t[(j + 1) % 3], z = t[(j + 2) % 3];
      int i = find(cyc, y);
      if (i < 0) continue;
      if (adjacent_on(cyc, y, x) && adjacent_on(cyc, y, z)) {
        cyc.erase(cyc.begin() + i);
        c.moves.push_back({ElementaryMove::TriangleSlide, t});
        done = true;
      }
    }
    for (int j = 0; j < 3 && !done; ++j) {
      int y = t[j], x = t[(j + 1) % 3], z = t[(j + 2) % 3];
      if (find(cyc, y) >= 0 || !adjacent_on(cyc, x, z)) continue;
      insert_between(cyc, x, z, y);
      c.moves.push_back({ElementaryMove::TriangleSlideInverse, t});
      done = true;
    }
    if (!done) throw std::logic_error("shelling step does not meet the curve");
  }
  c.final_cycle = cyc;
  return c;
}

Verdict validate_certificate(const MoveCertificate& c, const DiscComplex& d) {
  if (auto bad = disc_violation(d)) return {false, "not a disc: " + *bad};
  if (static_cast<long>(c.moves.size()) > 2L * d.w())
    return {false, "budget exceeded: " + std::to_string(c.moves.size()) + " moves for w = " +
                       std::to_string(d.w())};
  if (!same_cycle(c.initial, boundary_cycle(d)))
    return {false, "initial cycle is not the disc boundary"};
  std::map<std::array<int, 3>, int> index;
  std::set<int> disc_vertices;
  for (int i = 0; i < d.w(); ++i) {
    index[sorted(d.triangles[i])] = i;
    for (int v : d.triangles[i]) disc_vertices.insert(v);
  }
  std::vector<char> alive(d.w(), 1);
  std::set<int> inserted;
  std::vector<int> cyc = c.initial;
  for (std::size_t k = 0; k < c.moves.size(); ++k) {
    const auto& m = c.moves[k];
    const std::string at = "move " + std::to_string(k + 1) + " (" + m.str() + "): ";
    switch (m.kind) {
      case ElementaryMove::TriangleSlide:
      case ElementaryMove::TriangleSlideInverse: {
        auto it = index.find(sorted(m.triangle));
        if (it == index.end()) return {false, at + "triangle not in the disc"};
        if (!alive[it->second]) return {false, at + "triangle already used"};
        const auto& t = m.triangle;
        bool ok = false;
        for (int j = 0; j < 3 && !ok; ++j) {
          int y = t[j], x = t[(j + 1) % 3], z = t[(j + 2) % 3];
          if (m.kind == ElementaryMove::TriangleSlide) {
            if (find(cyc, y) >= 0 && adjacent_on(cyc, y, x) && adjacent_on(cyc, y, z) &&
                cyc.size() > 3) {
              cyc.erase(cyc.begin() + find(cyc, y));
              ok = true;
            }
          } else if (find(cyc, y) < 0 && adjacent_on(cyc, x, z)) {
            insert_between(cyc, x, z, y);
            ok = true;
          }
        }
        if (!ok) return {false, at + "triangle does not meet the curve as required"};
        alive[it->second] = 0;
        break;
      }
      case ElementaryMove::InsertVertex:
        if (!adjacent_on(cyc, m.a, m.b)) return {false, at + "segment not on the curve"};
        if (disc_vertices.count(m.vertex) || find(cyc, m.vertex) >= 0 ||
            inserted.count(m.vertex))
          return {false, at + "vertex is not new"};
        insert_between(cyc, m.a, m.b, m.vertex);
        inserted.insert(m.vertex);
        break;
      case ElementaryMove::RemoveVertex:
        if (!inserted.count(m.vertex) || find(cyc, m.vertex) < 0)
          return {false, at + "vertex was not inserted on the curve"};
        cyc.erase(cyc.begin() + find(cyc, m.vertex));
        inserted.erase(m.vertex);
        break;
    }
    if (!simple(cyc)) return {false, at + "curve is no longer a simple cycle"};
  }
  if (!same_cycle(cyc, c.final_cycle)) return {false, "final cycle does not match replay"};
  if (cyc.size() != 3) return {false, "final cycle is not a triangle"};
  int left = -1, n_alive = 0;
  for (int i = 0; i < d.w(); ++i)
    if (alive[i]) left = i, ++n_alive;
  if (n_alive != 1 || sorted(d.triangles[left]) != sorted({cyc[0], cyc[1], cyc[2]}))
    return {false, "final cycle is not the last remaining triangle"};
  return {true, "ok"};
}

std::string serialize(const MoveCertificate& c) {
  std::ostringstream out;
  out << "initial";
  for (int v : c.initial) out << " " << v;
  out << "\n";
  for (const auto& m : c.moves) out << m.str() << "\n";
  out << "final";
  for (int v : c.final_cycle) out << " " << v;
  out << "\n";
  return out.str();
}

namespace {

std::vector<std::vector<std::string>> lines_of(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto p = line.find('#'); p != std::string::npos) line.resize(p);
    std::istringstream ls(line);
    std::vector<std::string> w;
    for (std::string s; ls >> s;) w.push_back(s);
    out.push_back(std::move(w));
  }
  return out;
}

int integer(const std::string& s, std::size_t line) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (...) {
    used = 0;
  }
  if (used != s.size() || s.empty())
    throw InputError("line " + std::to_string(line) + ": expected an integer, got '" + s + "'");
  return v;
}

}  // namespace

MoveCertificate parse_certificate(const std::string& text) {
  MoveCertificate c;
  auto ls = lines_of(text);
  for (std::size_t i = 0; i < ls.size(); ++i) {
    const auto& w = ls[i];
    if (w.empty()) continue;
    const std::size_t ln = i + 1;
    auto need = [&](std::size_t n) {
      if (w.size() != n) throw InputError("line " + std::to_string(ln) + ": malformed '" + w[0] + "'");
    };
    if (w[0] == "initial" || w[0] == "final") {
      auto& cyc = w[0] == "initial" ? c.initial : c.final_cycle;
      for (std::size_t k = 1; k < w.size(); ++k) cyc.push_back(integer(w[k], ln));
    } else if (w[0] == "slide" || w[0] == "unslide") {
      need(4);
      ElementaryMove m{w[0] == "slide" ? ElementaryMove::TriangleSlide
                                       : ElementaryMove::TriangleSlideInverse};
      for (int k = 0; k < 3; ++k) m.triangle[k] = integer(w[k + 1], ln);
      c.moves.push_back(m);
    } else if (w[0] == "insert") {
      need(4);
      ElementaryMove m{ElementaryMove::InsertVertex};
      m.a = integer(w[1], ln);
      m.b = integer(w[2], ln);
      m.vertex = integer(w[3], ln);
      c.moves.push_back(m);
    } else if (w[0] == "remove") {
      need(2);
      ElementaryMove m{ElementaryMove::RemoveVertex};
      m.vertex = integer(w[1], ln);
      c.moves.push_back(m);
    } else {
      throw InputError("line " + std::to_string(ln) + ": unknown directive '" + w[0] + "'");
    }
  }
  return c;
}

std::string serialize(const DiscComplex& d) {
  std::ostringstream out;
  out << "triangles " << d.w() << "\n";
  for (const auto& t : d.triangles) out << "tri " << t[0] << " " << t[1] << " " << t[2] << "\n";
  return out.str();
}

DiscComplex parse_disc(const std::string& text) {
  DiscComplex d;
  int declared = -1;
  auto ls = lines_of(text);
  for (std::size_t i = 0; i < ls.size(); ++i) {
    const auto& w = ls[i];
    if (w.empty()) continue;
    const std::size_t ln = i + 1;
    if (w[0] == "triangles" && w.size() == 2 && declared < 0) {
      declared = integer(w[1], ln);
    } else if (w[0] == "tri" && w.size() == 4 && declared >= 0) {
      d.triangles.push_back({integer(w[1], ln), integer(w[2], ln), integer(w[3], ln)});
    } else {
      throw InputError("line " + std::to_string(ln) + ": expected " +
                       (declared < 0 ? "'triangles <w>'" : "'tri <a> <b> <c>'"));
    }
  }
  if (declared < 0) throw InputError("missing 'triangles <w>' line");
  if (declared != d.w())
    throw InputError("declared " + std::to_string(declared) + " triangles, found " +
                     std::to_string(d.w()));
  return d;
}

}  // namespace twistnf
