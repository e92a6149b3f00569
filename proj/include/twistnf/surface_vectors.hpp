// Vector-level normal surface algebra and the spanning-disc search.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twistnf/hilbert.hpp"
#include "twistnf/matching.hpp"

namespace twistnf {

// Throws InputError naming the first incompatible pair.
SurfaceVector haken_sum(const SurfaceVector& a, const SurfaceVector& b, const MatchingSystem& sys);

// Both are linear; each variable's contribution is a fraction over a common
// denominator. Throws InputError if the total is not an integer.
std::int64_t euler_characteristic(const SurfaceVector& v, const MatchingSystem& sys);
std::int64_t weight(const SurfaceVector& v, const MatchingSystem& sys);

struct LinearForms {
  std::int64_t denominator = 1;
  std::vector<std::int64_t> euler, weight;  // numerators per variable
};
LinearForms linear_forms(const MatchingSystem& sys);

// Every marked edge of the link is traversed exactly once: over the
// rectangles around it, 2 * longitudinal + corner arcs == 2, with corner
// arcs (if any) one at each end. Throws InputError if v is not
// boundary-restricted.
bool spans_knot(const SurfaceVector& v, const MatchingSystem& sys);

struct SpanningCandidate {
  SurfaceVector vector;
  std::int64_t weight = 0;
  std::int64_t euler = 0;
  bool compatible = false;
  bool boundary_restricted = false;
  bool spans = false;
  bool fundamental = false;
  bool within_bound = false;
};

struct SearchResult {
  MatchingSystem system;
  std::vector<SurfaceVector> basis;
  std::vector<SpanningCandidate> candidates;  // sorted by weight, then basis order
  BigInt coordinate_bound;
  BigInt disc_count_bound;     // 2^(120t + 10)
  bool winner_within_disc_bound = false;
  std::string diagnostic;
};

SearchResult search_spanning_disc(const MarkedTriangulation& tri, const HilbertOptions& opt = {});

}  // namespace twistnf
