// Exact evaluation of the disc-count, move-count and Reidemeister bounds and
// of every inequality used to chain them.
#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace twistnf {

using BigInt = boost::multiprecision::cpp_int;

struct DiscCountBound {
  BigInt raw;      // 59t * 12^ceil((59t-1)/2)
  BigInt relaxed;  // 59t * 2^(118t-2)
  BigInt total;    // 2^(120t+10)
  bool raw_le_relaxed = false;
  bool squared_le_total = false;  // 59t * 59t * 2^(118t-2) <= 2^(120t+10)
};
DiscCountBound disc_count_bound(std::int64_t t);

// 2^(120t+14); throws std::logic_error if 12 * 2^(120t+10) <= 2^(120t+14)
// fails.
BigInt elementary_move_bound(std::int64_t t);
inline std::int64_t elementary_move_exponent(std::int64_t t) { return 120 * t + 14; }

// ceil(2k (n + k/2 + 1)^2) = ceil(k (2n + k + 2)^2 / 2).
BigInt projection_bound(std::int64_t n_edges, std::int64_t k_moves);

// 140(n+1) tetrahedra.
BigInt diagram_triangulation_bound(std::int64_t n);

struct ReidemeisterBound {
  enum Status { Verified, OneCrossingException } status = Verified;
  std::int64_t t = 0;
  std::int64_t q_exponent = 0;      // Q < 2^q_exponent = 2^(360t+43)
  std::int64_t final_exponent = 0;  // 2^(10^5 n)
  bool expanded = false;            // Q compared in full
  bool q_below = false;             // Q < 2^(360t+43)
  bool chain_closes = false;        // 360t + 43 <= 10^5 n
  BigInt q;                         // only when expanded
  std::string status_text() const;
};
// Expands Q exactly when 360t+43 <= bit_cap, otherwise compares exponents.
ReidemeisterBound reidemeister_bound(std::int64_t n, std::int64_t bit_cap = 1'000'000);

// "2^e" if v is a power of two, otherwise decimal.
std::string symbolic(const BigInt& v);

}  // namespace twistnf
