#include "twistnf/hilbert.hpp"

#include <algorithm>
#include <functional>

namespace twistnf {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceError("int64 overflow in Hilbert basis");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("int64 overflow in Hilbert basis");
  return r;
}

struct Cand {
  SurfaceVector x;
  std::vector<std::int64_t> r;  // A x
  bool operator<(const Cand& o) const { return x < o.x; }
  bool operator==(const Cand& o) const { return x == o.x; }
};

bool dominates(const SurfaceVector& q, const SurfaceVector& b) {
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q[i] < b[i]) return false;
  return true;
}

bool is_zero(const std::vector<std::int64_t>& r) {
  return std::all_of(r.begin(), r.end(), [](auto x) { return x == 0; });
}

}  // namespace

std::int64_t max_abs_row_sum(const Matrix& a) {
  std::int64_t best = 0;
  for (const auto& row : a) {
    std::int64_t s = 0;
    for (auto c : row) s = checked_add(s, c < 0 ? -c : c);
    best = std::max(best, s);
  }
  return best;
}

std::vector<SurfaceVector> hilbert_basis(const Matrix& a, int n, const HilbertOptions& opt) {
  if (n < 1) throw InputError("a system needs at least one variable");
  const std::size_t m = a.size();
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n) throw InputError("equation width differs from n");
  // column j of A
  std::vector<std::vector<std::int64_t>> col(n, std::vector<std::int64_t>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) col[j][i] = a[i][j];

  std::vector<SurfaceVector> basis;
  std::vector<Cand> frontier;
  for (int j = 0; j < n; ++j) {
    Cand c{SurfaceVector(n, 0), col[j]};
    c.x[j] = 1;
    frontier.push_back(std::move(c));
  }

  auto expand = [&](const Cand& p, std::vector<Cand>& out) {
    for (int j = 0; j < n; ++j) {
      std::int64_t dot = 0;
      for (std::size_t i = 0; i < m; ++i) dot = checked_add(dot, checked_mul(p.r[i], col[j][i]));
      if (dot >= 0) continue;
      Cand q{p.x, p.r};
      q.x[j] = checked_add(q.x[j], 1);
      bool covered = false;
      for (const auto& b : basis)
        if (dominates(q.x, b)) {
          covered = true;
          break;
        }
      if (covered) continue;
      for (std::size_t i = 0; i < m; ++i) q.r[i] = checked_add(q.r[i], col[j][i]);
      out.push_back(std::move(q));
    }
  };

  while (!frontier.empty()) {
    std::vector<Cand> rest;
    for (auto& c : frontier) {
      if (is_zero(c.r)) basis.push_back(std::move(c.x));
      else rest.push_back(std::move(c));
    }
    if (basis.size() > opt.max_candidates)
      throw ResourceError("Hilbert basis exceeds the cap of " +
                          std::to_string(opt.max_candidates) + " vectors");
    std::vector<Cand> next;
    const int k = static_cast<int>(rest.size());
    if (opt.exec == Exec::Parallel) {
      std::vector<std::vector<Cand>> parts(k);
      bool overflow = false;
#pragma omp parallel for schedule(dynamic, 16)
      for (int i = 0; i < k; ++i) {
        try {
          expand(rest[i], parts[i]);
        } catch (const ResourceError&) {
#pragma omp atomic write
          overflow = true;
        }
      }
      if (overflow) throw ResourceError("int64 overflow in Hilbert basis");
      for (auto& p : parts)
        for (auto& c : p) next.push_back(std::move(c));
    } else {
      for (int i = 0; i < k; ++i) expand(rest[i], next);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next.size() > opt.max_candidates)
      throw ResourceError("Hilbert completion exceeds the cap of " +
                          std::to_string(opt.max_candidates) + " candidates");
    frontier = std::move(next);
  }
  std::sort(basis.begin(), basis.end(), std::greater<>());
  return basis;
}

std::vector<SurfaceVector> hilbert_basis(const MatchingSystem& sys, const HilbertOptions& opt) {
  return hilbert_basis(sys.equations, sys.size(), opt);
}

bool is_fundamental(const SurfaceVector& v, const Matrix& a) {
  const int n = static_cast<int>(v.size());
  if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) return false;
  std::vector<int> support;
  for (int j = 0; j < n; ++j)
    if (v[j] > 0) support.push_back(j);
  const std::size_t m = a.size();
  // Largest positive contribution the remaining coordinates can still make
  // to each row, for pruning.
  const int s = static_cast<int>(support.size());
  std::vector<std::vector<std::int64_t>> pos(s + 1, std::vector<std::int64_t>(m, 0)),
      neg(s + 1, std::vector<std::int64_t>(m, 0));
  for (int k = s - 1; k >= 0; --k)
    for (std::size_t i = 0; i < m; ++i) {
      std::int64_t c = checked_mul(a[i][support[k]], v[support[k]]);
      pos[k][i] = pos[k + 1][i] + std::max<std::int64_t>(c, 0);
      neg[k][i] = neg[k + 1][i] + std::min<std::int64_t>(c, 0);
    }
  std::vector<std::int64_t> u(s, 0), r(m, 0);
  std::function<bool(int, bool, bool)> rec = [&](int k, bool nonzero, bool below) -> bool {
    for (std::size_t i = 0; i < m; ++i)
      if (r[i] + pos[k][i] < 0 || r[i] + neg[k][i] > 0) return false;
    if (k == s) return nonzero && below && is_zero(r);
    const int j = support[k];
    for (std::int64_t x = 0; x <= v[j]; ++x) {
      u[k] = x;
      if (rec(k + 1, nonzero || x > 0, below || x < v[j])) return true;
      for (std::size_t i = 0; i < m; ++i) r[i] += a[i][j];
    }
    for (std::size_t i = 0; i < m; ++i) r[i] -= (v[j] + 1) * a[i][j];
    return false;
  };
  return !rec(0, false, false);
}

BigInt fundamental_coordinate_bound(std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 1) throw InputError("bound needs n >= 1 and m >= 1");
  const std::int64_t e = n / 2;  // ceil((n - 1) / 2)
  return BigInt(n) * boost::multiprecision::pow(BigInt(m), static_cast<unsigned>(e));
}

}  // namespace twistnf
