// Prints graded dimensions of the symplectic chord diagram algebra with and
// without the twist relation.

#include <iomanip>
#include <iostream>

#include <surfbraid/symplectic.hpp>

int main() {
  using namespace surfbraid;
  for (SurfaceParams s : {SurfaceParams{1, 0, 2}, SurfaceParams{1, 1, 2}}) {
    std::cout << to_string(s) << "\n  d   twist  no-twist\n";
    for (int d = 0; d <= 4; ++d) {
      std::cout << "  " << d << std::setw(8) << symp_graded_dim(s, d) << std::setw(10)
                << symp_graded_dim(s, d, {false, false}) << "\n";
    }
  }
  return 0;
}
