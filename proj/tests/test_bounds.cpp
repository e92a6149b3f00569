#include <doctest.h>
#include <gmp.h>

#include <string>

#include "twistnf/bounds.hpp"
#include "twistnf/common.hpp"

using namespace twistnf;

namespace {

// Independent big-integer oracle on GMP.
struct Z {
  mpz_t v;
  Z() { mpz_init(v); }
  explicit Z(long x) { mpz_init_set_si(v, x); }
  Z(const Z& o) { mpz_init_set(v, o.v); }
  ~Z() { mpz_clear(v); }
  Z& operator=(const Z& o) {
    mpz_set(v, o.v);
    return *this;
  }
  std::string str() const {
    char* s = mpz_get_str(nullptr, 10, v);
    std::string r(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, r.size() + 1);
    return r;
  }
};

Z pow_ui(long b, unsigned long e) {
  Z r;
  mpz_ui_pow_ui(r.v, b, e);
  return r;
}
Z mul(const Z& a, const Z& b) {
  Z r;
  mpz_mul(r.v, a.v, b.v);
  return r;
}
Z add(const Z& a, const Z& b) {
  Z r;
  mpz_add(r.v, a.v, b.v);
  return r;
}
int cmp(const Z& a, const Z& b) { return mpz_cmp(a.v, b.v); }

}  // namespace

TEST_CASE("disc-count chain for t in [1, 100]") {
  for (long t = 1; t <= 100; ++t) {
    auto b = disc_count_bound(t);
    long n = 59 * t;
    Z raw = mul(Z(n), pow_ui(12, n / 2));  // ceil((n - 1) / 2) == n / 2
    Z relaxed = mul(Z(n), pow_ui(2, 118 * t - 2));
    Z total = pow_ui(2, 120 * t + 10);
    CHECK(b.raw.str() == raw.str());
    CHECK(b.relaxed.str() == relaxed.str());
    CHECK(b.total.str() == total.str());
    CHECK(b.raw_le_relaxed == (cmp(raw, relaxed) <= 0));
    CHECK(b.squared_le_total == (cmp(mul(Z(n), relaxed), total) <= 0));
    CHECK(b.raw_le_relaxed);
    CHECK(b.squared_le_total);
    Z moves = pow_ui(2, 120 * t + 14);
    CHECK(elementary_move_bound(t).str() == moves.str());
    CHECK(cmp(mul(Z(12), total), moves) <= 0);
  }
  CHECK_THROWS_AS(disc_count_bound(0), InputError);
}

TEST_CASE("symbolic output") {
  CHECK(symbolic(elementary_move_bound(1)) == "2^134");
  CHECK(symbolic(BigInt(12)) == "12");
  CHECK(symbolic(BigInt(1)) == "2^0");
  CHECK(symbolic(BigInt(0)) == "0");
}

TEST_CASE("projection and diagram bounds") {
  for (long n = 0; n < 20; ++n)
    for (long k = 0; k < 20; ++k) {
      // ceil(2k (n + k/2 + 1)^2) over exact rationals: 2k(n+k/2+1)^2 = k(2n+k+2)^2/2.
      Z s = Z(2 * n + k + 2);
      Z num = mul(Z(k), mul(s, s));
      Z q;
      mpz_cdiv_q_ui(q.v, num.v, 2);
      CHECK(projection_bound(n, k).str() == q.str());
    }
  CHECK(diagram_triangulation_bound(3) == 560);
}

TEST_CASE("Reidemeister chain for n in [2, 10]") {
  for (long n = 2; n <= 10; ++n) {
    auto r = reidemeister_bound(n);
    long t = 140 * (n + 1);
    CHECK(r.t == t);
    CHECK(r.status == ReidemeisterBound::Verified);
    REQUIRE(r.expanded);
    Z inner = add(add(Z(2 * t), pow_ui(2, 120 * t + 13)), Z(1));
    Z q = mul(pow_ui(2, 120 * t + 14), mul(inner, inner));
    CHECK(r.q.str() == q.str());
    CHECK(r.q_below == (cmp(q, pow_ui(2, 360 * t + 43)) < 0));
    CHECK(r.q_below);
    CHECK(r.chain_closes);
    CHECK(cmp(pow_ui(2, 360 * t + 43), pow_ui(2, 100000 * n)) <= 0);
    // The exponent-only path reaches the same verdict.
    auto s = reidemeister_bound(n, 0);
    CHECK(!s.expanded);
    CHECK(s.q_below == r.q_below);
  }
}

TEST_CASE("Reidemeister chain by exponents up to 10^6") {
  for (long n = 2; n <= 1'000'000; n += n < 1000 ? 1 : 997) {
    auto r = reidemeister_bound(n, 0);
    CHECK(r.q_below);
    CHECK(r.chain_closes);
  }
  auto r = reidemeister_bound(1'000'000, 0);
  CHECK(r.chain_closes);
}

TEST_CASE("one crossing is the documented exception") {
  auto r = reidemeister_bound(1);
  CHECK(r.status == ReidemeisterBound::OneCrossingException);
  CHECK(!r.chain_closes);
  CHECK(r.q_below);
  CHECK(r.status_text().find("n = 1") != std::string::npos);
}
