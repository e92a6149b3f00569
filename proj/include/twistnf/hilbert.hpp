// Minimal Hilbert basis of {x >= 0 integral : Ax = 0}.
#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "twistnf/disc_catalog.hpp"  // Exec
#include "twistnf/matching.hpp"

namespace twistnf {

using BigInt = boost::multiprecision::cpp_int;
using Matrix = std::vector<std::vector<std::int64_t>>;

struct HilbertOptions {
  std::size_t max_candidates = 1'000'000;  // per completion level and in total basis size
  Exec exec = Exec::Parallel;
};

// Contejean-Devie completion. Vectors are sorted in decreasing lexicographic
// order. Throws ResourceError when a cap is hit or int64 would overflow.
std::vector<SurfaceVector> hilbert_basis(const Matrix& a, int n, const HilbertOptions& opt = {});
std::vector<SurfaceVector> hilbert_basis(const MatchingSystem& sys, const HilbertOptions& opt = {});

// Whether a non-zero solution v admits no split v = v1 + v2 into non-zero
// solutions. Searches solutions dominated by v.
bool is_fundamental(const SurfaceVector& v, const Matrix& a);

// n * m^((n-1)/2), with the exponent rounded up for even n.
BigInt fundamental_coordinate_bound(std::int64_t n, std::int64_t m);

// Largest per-equation sum of absolute coefficients.
std::int64_t max_abs_row_sum(const Matrix& a);

}  // namespace twistnf
