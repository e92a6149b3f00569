#include "twistnf/surface_vectors.hpp"

#include <algorithm>
#include <numeric>

namespace twistnf {

SurfaceVector haken_sum(const SurfaceVector& a, const SurfaceVector& b, const MatchingSystem& sys) {
  if (a.size() != b.size() || static_cast<int>(a.size()) != sys.size())
    throw InputError("vectors do not match the system");
  SurfaceVector s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  if (auto p = incompatibility(s, sys))
    throw InputError("incompatible pair (" + std::to_string(p->first) + ", " +
                     std::to_string(p->second) + ")");
  return s;
}

LinearForms linear_forms(const MatchingSystem& sys) {
  const auto& tri = sys.tri;
  LinearForms lf;
  std::int64_t d = 2;
  for (int deg : tri.edge_degree) d = std::lcm(d, static_cast<std::int64_t>(deg));
  lf.denominator = d;
  auto glued = [&](int tet, int f) { return tri.glue[tet][f].has_value(); };
  for (int k = 0; k < sys.size(); ++k) {
    const int tet = sys.vars[k].tet;
    const NormalDiscType& disc = sys.disc(k);
    std::int64_t V = 0, E = 0, W = 0;
    for (const Token& t : disc.tokens) {
      if (t.kind == Token::Edge) {
        std::int64_t share = d / tri.edge_degree[tri.eclass[tet][t.edge]];
        V += share;
        W += share;
      } else {
        V += glued(tet, t.face) ? d / 2 : d;
      }
    }
    for (const FaceArc& a : disc.face_arcs) E += glued(tet, a.face) ? d / 2 : d;
    E += d * static_cast<std::int64_t>(disc.rect_arcs.size() + disc.tri_arcs.size());
    lf.euler.push_back(V - E + d);
    lf.weight.push_back(W);
  }
  return lf;
}

namespace {

std::int64_t evaluate(const SurfaceVector& v, const std::vector<std::int64_t>& num,
                      std::int64_t den, const char* what) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * num[i];
  if (s % den != 0)
    throw InputError(std::string("non-integral ") + what + " (" + std::to_string(s) + "/" +
                     std::to_string(den) + ")");
  return s / den;
}

}  // namespace

std::int64_t euler_characteristic(const SurfaceVector& v, const MatchingSystem& sys) {
  auto lf = linear_forms(sys);
  return evaluate(v, lf.euler, lf.denominator, "Euler characteristic");
}

std::int64_t weight(const SurfaceVector& v, const MatchingSystem& sys) {
  auto lf = linear_forms(sys);
  return evaluate(v, lf.weight, lf.denominator, "weight");
}

bool spans_knot(const SurfaceVector& v, const MatchingSystem& sys) {
  if (!is_boundary_restricted(v, sys)) throw InputError("vector is not boundary-restricted");
  const auto& tri = sys.tri;
  struct Acc {
    std::int64_t longitudinal = 0, corners = 0;
    std::map<int, std::int64_t> at_end;  // global vertex class -> corner arcs
  };
  std::map<int, Acc> per_edge;
  for (int c = 0; c < tri.edge_classes; ++c)
    if (tri.edge_marked[c]) per_edge[c];
  if (per_edge.empty()) return false;
  for (const auto& r : sys.rectangles) {
    Acc& acc = per_edge[tri.eclass[r.tet][r.edge]];
    RectangleTally t = tally(v, r);
    acc.longitudinal += t.longitudinal;
    for (const auto& [corner, n] : t.corners) {
      acc.corners += n;
      acc.at_end[tri.vclass[r.tet][corner.second]] += n;
    }
  }
  for (const auto& [c, acc] : per_edge) {
    if (2 * acc.longitudinal + acc.corners != 2) return false;
    if (acc.corners == 0) continue;
    auto ends = tri.edge_ends(c);
    if (ends[0] == ends[1]) continue;
    for (int e : ends) {
      auto it = acc.at_end.find(e);
      if (it == acc.at_end.end() || it->second != 1) return false;
    }
  }
  return true;
}

SearchResult search_spanning_disc(const MarkedTriangulation& tri, const HilbertOptions& opt) {
  SearchResult res;
  res.system = build_matching_system(tri);
  const MatchingSystem& sys = res.system;
  if (std::none_of(sys.tri.edge_marked.begin(), sys.tri.edge_marked.end(),
                   [](char c) { return c; }))
    throw InputError("triangulation has no knot");
  res.basis = hilbert_basis(sys, opt);
  res.coordinate_bound =
      fundamental_coordinate_bound(sys.size(), std::max<std::int64_t>(1, sys.max_abs_sum()));
  res.disc_count_bound = BigInt(1) << (120 * sys.tri.t + 10);
  const auto lf = linear_forms(sys);

  std::vector<std::pair<std::size_t, SpanningCandidate>> found;
  for (std::size_t b = 0; b < res.basis.size(); ++b) {
    const SurfaceVector& v = res.basis[b];
    SpanningCandidate c;
    c.vector = v;
    c.compatible = !incompatibility(v, sys);
    c.boundary_restricted = is_boundary_restricted(v, sys);
    if (!c.compatible || !c.boundary_restricted) continue;
    c.spans = spans_knot(v, sys);
    if (!c.spans) continue;
    std::int64_t chi = 0, w = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      chi += v[i] * lf.euler[i];
      w += v[i] * lf.weight[i];
    }
    if (chi % lf.denominator || w % lf.denominator)
      throw std::logic_error("non-integral Euler characteristic or weight on a solution");
    c.euler = chi / lf.denominator;
    c.weight = w / lf.denominator;
    if (c.euler != 1) continue;
    c.fundamental = is_fundamental(v, sys.equations);
    c.within_bound = std::all_of(v.begin(), v.end(),
                                 [&](auto x) { return BigInt(x) <= res.coordinate_bound; });
    found.push_back({b, std::move(c)});
  }
  std::stable_sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    return x.second.weight < y.second.weight;
  });
  for (auto& [b, c] : found) res.candidates.push_back(std::move(c));
  if (res.candidates.empty()) {
    res.diagnostic = "no basis element is a compatible, boundary-restricted spanning disc (" +
                     std::to_string(res.basis.size()) + " basis vectors examined)";
  } else {
    const auto& v = res.candidates.front().vector;
    BigInt total = 0;
    for (auto x : v) total += x;
    res.winner_within_disc_bound = total <= res.disc_count_bound;
  }
  return res;
}

}  // namespace twistnf
