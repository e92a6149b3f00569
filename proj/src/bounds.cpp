#include "twistnf/bounds.hpp"

#include <stdexcept>

#include "twistnf/common.hpp"

namespace twistnf {

namespace {

BigInt pow2(std::int64_t e) { return BigInt(1) << static_cast<unsigned>(e); }

void need_positive(std::int64_t x, const char* what) {
  if (x < 1) throw InputError(std::string(what) + " must be at least 1");
}

}  // namespace

DiscCountBound disc_count_bound(std::int64_t t) {
  need_positive(t, "tetrahedron count");
  DiscCountBound b;
  const std::int64_t n = 59 * t;
  b.raw = BigInt(n) * boost::multiprecision::pow(BigInt(12), static_cast<unsigned>(n / 2));
  b.relaxed = BigInt(n) * pow2(118 * t - 2);
  b.total = pow2(120 * t + 10);
  b.raw_le_relaxed = b.raw <= b.relaxed;
  b.squared_le_total = BigInt(n) * b.relaxed <= b.total;
  return b;
}

BigInt elementary_move_bound(std::int64_t t) {
  need_positive(t, "tetrahedron count");
  BigInt bound = pow2(elementary_move_exponent(t));
  if (!(12 * pow2(120 * t + 10) <= bound))
    throw std::logic_error("12 * 2^(120t+10) exceeds 2^(120t+14)");
  return bound;
}

BigInt projection_bound(std::int64_t n_edges, std::int64_t k_moves) {
  if (n_edges < 0 || k_moves < 0) throw InputError("edge and move counts must be non-negative");
  BigInt s = BigInt(2 * n_edges + k_moves + 2);
  BigInt num = BigInt(k_moves) * s * s;
  return (num + 1) / 2;
}

BigInt diagram_triangulation_bound(std::int64_t n) {
  if (n < 0) throw InputError("crossing count must be non-negative");
  return BigInt(140) * (n + 1);
}

std::string ReidemeisterBound::status_text() const {
  switch (status) {
    case Verified: return "verified";
    case OneCrossingException:
      return "exception at n = 1 (360t+43 > 10^5 n; the bound holds directly for one crossing)";
  }
  return "?";
}

ReidemeisterBound reidemeister_bound(std::int64_t n, std::int64_t bit_cap) {
  need_positive(n, "crossing count");
  ReidemeisterBound r;
  r.t = 140 * (n + 1);
  r.q_exponent = 360 * r.t + 43;
  r.final_exponent = 100000 * n;
  const std::int64_t e14 = 120 * r.t + 14, e13 = 120 * r.t + 13;
  if (r.q_exponent <= bit_cap) {
    BigInt inner = BigInt(2 * r.t) + pow2(e13) + 1;
    r.q = pow2(e14) * inner * inner;
    r.expanded = true;
    r.q_below = r.q < pow2(r.q_exponent);
  } else {
    // 2t + 2^(120t+13) + 1 < 2^(120t+14) because 2t + 1 < 2^(120t+13), and
    // then Q < 2^(120t+14) * 2^(2(120t+14)) = 2^(360t+42).
    BigInt small = BigInt(2 * r.t + 1);
    bool inner_below = msb(small) + 1 <= static_cast<unsigned>(e13);
    r.q_below = inner_below && 3 * e14 <= r.q_exponent;
  }
  r.chain_closes = r.q_exponent <= r.final_exponent;
  r.status = n == 1 ? ReidemeisterBound::OneCrossingException : ReidemeisterBound::Verified;
  return r;
}

std::string symbolic(const BigInt& v) {
  if (v > 0 && (v & (v - 1)) == 0) return "2^" + std::to_string(msb(v));
  return v.str();
}

}  // namespace twistnf
