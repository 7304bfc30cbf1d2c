// Serial vs parallel tally of (des, des2, ear) over S_n.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "permstat/reduce.hpp"
#include "permstat/stats.hpp"

using namespace permstat;

namespace {

std::optional<std::vector<int>> key(const Permutation& p) {
  const StatVector s = stat_vector(p);
  return std::vector<int>{s[Stat::des], s[Stat::des2], s[Stat::ear]};
}

template <class Fn>
double time_ms(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int lo = argc > 1 ? std::atoi(argv[1]) : 7;
  const int hi = argc > 2 ? std::atoi(argv[2]) : 9;
  std::printf("threads %d\n", max_threads());
  std::printf("%3s %12s %12s %8s %6s\n", "n", "serial_ms", "parallel_ms", "speedup", "same");
  for (int n = lo; n <= hi; ++n) {
    Tally<std::vector<int>> a, b;
    const double ts = time_ms([&] { a = tally_serial<std::vector<int>>(n, Filter::All, key); });
    const double tp = time_ms([&] { b = tally_parallel<std::vector<int>>(n, Filter::All, key); });
    std::printf("%3d %12.1f %12.1f %8.2f %6s\n", n, ts, tp, ts / tp, a == b ? "yes" : "no");
    if (a != b) return 1;
  }
  return 0;
}
