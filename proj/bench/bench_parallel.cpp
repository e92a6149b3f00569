// Serial vs parallel timings for the two OpenMP kernels: catalog
// enumeration and Hilbert completion. Results must agree bit for bit.
#include <chrono>
#include <cstdio>
#include <omp.h>

#include "twistnf/disc_catalog.hpp"
#include "twistnf/hilbert.hpp"
#include "twistnf/triangulation.hpp"

using namespace twistnf;

namespace {

template <class F>
double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const char* tri_path = argc > 1 ? argv[1] : nullptr;
  std::printf("threads %d\n", omp_get_max_threads());
  bool agree = true;
  for (TetType t : kAllTypes) {
    DiscCatalog s, p;
    double ts = seconds([&] { s = build_catalog(canonical_marking(t), Exec::Serial); });
    double tp = seconds([&] { p = build_catalog(canonical_marking(t), Exec::Parallel); });
    bool same = s.twisted.size() == p.twisted.size();
    for (std::size_t i = 0; same && i < s.twisted.size(); ++i)
      same = s.twisted[i].encoding == p.twisted[i].encoding;
    agree &= same;
    std::printf("catalog %-22s serial %.4fs parallel %.4fs %s\n", type_name(t).c_str(), ts, tp,
                same ? "agree" : "DIFFER");
  }
  if (tri_path) {
    auto sys = build_matching_system(load_triangulation(tri_path));
    std::vector<SurfaceVector> s, p;
    double ts = seconds([&] { s = hilbert_basis(sys, {1'000'000, Exec::Serial}); });
    double tp = seconds([&] { p = hilbert_basis(sys, {1'000'000, Exec::Parallel}); });
    agree &= s == p;
    std::printf("hilbert %zu vectors serial %.3fs parallel %.3fs %s\n", s.size(), ts, tp,
                s == p ? "agree" : "DIFFER");
  }
  return agree ? 0 : 1;
}
