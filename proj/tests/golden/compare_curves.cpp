// compare_curves <tol> <expected.csv> <actual.csv> [...pairs]
// Exit 0 iff each pair shares a grid and agrees within tol pointwise.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>

#include "dyadic/io.hpp"

int main(int argc, char** argv) {
  if (argc < 4 || (argc - 2) % 2 != 0) {
    std::fprintf(stderr, "usage: compare_curves <tol> <expected> <actual> [...]\n");
    return 2;
  }
  const double tol = std::strtod(argv[1], nullptr);
  int failed = 0;
  for (int a = 2; a + 1 < argc; a += 2) {
    try {
      const auto want = dyadic::io::read_curve_csv(argv[a]);
      const auto got = dyadic::io::read_curve_csv(argv[a + 1]);
      if (want.size() != got.size() || want.grid().s_max() != got.grid().s_max()) {
        std::printf("%s: grid mismatch\n", argv[a + 1]);
        ++failed;
        continue;
      }
      double worst = 0;
      for (std::size_t i = 0; i < want.size(); ++i) worst = std::max(worst, std::abs(want[i] - got[i]));
      std::printf("%s: max deviation %.3e\n", argv[a + 1], worst);
      failed += worst <= tol ? 0 : 1;
    } catch (const std::exception& e) {
      std::printf("%s: %s\n", argv[a + 1], e.what());
      ++failed;
    }
  }
  return failed == 0 ? 0 : 1;
}
