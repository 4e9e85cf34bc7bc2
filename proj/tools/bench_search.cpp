// Benchmark: serial reference BFS vs the OpenMP level-parallel kernel on a
// small corpus of diagrams. Run manually; not part of ctest.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "knots/braid.hpp"
#include "knots/search.hpp"

#ifdef KNOTS_HAVE_OPENMP
#include <omp.h>
#endif

namespace {

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  using knots::braid_closure;
  using knots::parse_braid_word;

  struct Case {
    std::string name;
    std::string braid;
  };
  std::vector<Case> cases = {
      {"trefoil T(2,3)", "2 | 1 1 1"},
      {"T(2,7)", "2 | 1 1 1 1 1 1 1"},
      {"T(3,4)", "3 | 1 2 1 2 1 2 1 2"},
      {"6-crossing knot", "3 | 1 1 1 -2 1 -2"},
      {"mixed 8-crossing", "4 | 1 -2 3 1 -2 3 1 1"},
  };

#ifdef KNOTS_HAVE_OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (built without OpenMP)\n";
#endif
  std::cout << std::left << std::setw(20) << "case" << std::setw(10) << "min" << std::setw(12) << "states"
            << std::setw(12) << "serial[s]" << std::setw(12) << "parallel[s]" << "speedup\n";

  for (const auto& c : cases) {
    auto d = braid_closure(parse_braid_word(c.braid));
    auto t0 = std::chrono::steady_clock::now();
    auto serial = knots::min_reconnections_search_serial(d, 10000000);
    double ts = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    auto parallel = knots::min_reconnections_search(d, 10000000);
    double tp = seconds_since(t0);
    if (serial.min_moves != parallel.min_moves) {
      std::cerr << "MISMATCH on " << c.name << ": serial " << serial.min_moves << " vs parallel " << parallel.min_moves
                << "\n";
      return 1;
    }
    std::cout << std::left << std::setw(20) << c.name << std::setw(10) << serial.min_moves << std::setw(12)
              << serial.states_expanded << std::setw(12) << std::fixed << std::setprecision(3) << ts << std::setw(12)
              << tp << std::setprecision(2) << (tp > 0 ? ts / tp : 0.0) << "\n";
  }
  return 0;
}
