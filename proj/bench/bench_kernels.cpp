// Times the OpenMP kernels against their serial references.
//   bench_kernels [repeats]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "starplanar/cycles.hpp"
#include "starplanar/graph_io.hpp"
#include "starplanar/planarity.hpp"

using namespace starplanar;

namespace {

double best_of(int repeats, const std::function<void()>& f) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto start = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

struct Instance {
  std::string label() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "(%d,%d)", n4, n6);
    return buf;
  }

  int n4;
  int n6;
  std::uint64_t seed;
};

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d\n", omp_get_max_threads());

  std::printf("\nfind_obstruct\n%-10s %8s %12s %12s %8s\n", "(n4,n6)", "walks", "serial s", "parallel s", "same");
  for (const Instance& in : {Instance{4, 0, 1}, Instance{5, 1, 3}, Instance{3, 2, 4}, Instance{6, 2, 5}}) {
    const auto g = gen_random(in.n4, in.n6, in.seed);
    const auto walks = enumerate_closed_walks(g).size();
    std::optional<ObstructCertificate> a, b;
    const double ts = best_of(repeats, [&] { a = reference::find_obstruct(g); });
    const double tp = best_of(repeats, [&] { b = find_obstruct(g); });
    std::printf("%-10s %8zu %12.4f %12.4f %8s\n", in.label().c_str(), walks, ts, tp,
                a == b ? "yes" : "NO");
  }

  std::printf("\nfind_planar_star_embedding\n%-10s %8s %12s %12s %8s\n", "(n4,n6)", "planar", "serial s",
              "parallel s", "same");
  for (const Instance& in : {Instance{14, 0, 11}, Instance{16, 0, 12}, Instance{12, 4, 13}, Instance{18, 0, 14}}) {
    const auto g = gen_random(in.n4, in.n6, in.seed);
    std::optional<EmbeddingWitness> a, b;
    const double ts = best_of(repeats, [&] { a = reference::find_planar_star_embedding(g); });
    const double tp = best_of(repeats, [&] { b = find_planar_star_embedding(g); });
    const bool same = a.has_value() == b.has_value() && (!a || a->rotation.rotations == b->rotation.rotations);
    std::printf("%-10s %8s %12.4f %12.4f %8s\n", in.label().c_str(), a ? "yes" : "no", ts,
                tp, same ? "yes" : "NO");
  }
}
