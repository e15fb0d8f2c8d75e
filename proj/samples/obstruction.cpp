// Runs the obstruction pipeline on a few surfaces and prints each report.

#include <iostream>
#include <vector>

#include <surfbraid/verifier.hpp>

int main() {
  using namespace surfbraid;
  std::vector<SurfaceParams> const surfaces{{1, 1, 2}, {1, 0, 3}, {2, 0, 2}, {0, 2, 3}};
  int                              unexpected = 0;
  for (auto const& s : surfaces) {
    auto rep = verify_nonexistence(s);
    std::cout << to_string(rep) << "\n";
    bool const want = s.genus >= 1;
    if ((rep.verdict == Verdict::ObstructionEstablished) != want) {
      ++unexpected;
    }
  }
  return unexpected;
}
