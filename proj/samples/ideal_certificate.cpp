// Shows that a bead conjugate of a chord equals the opposite chord with the
// inverse bead, and prints the certificate that proves it.

#include <iostream>

#include <surfbraid/ideal.hpp>

int main() {
  using namespace surfbraid;
  SurfaceParams const s{1, 1, 2};
  Truncation const    t{2, 4};
  Pi1Word const       gamma{pi1::a(1)};

  auto lhs = gmp_generator<Rational>(1, 2, gamma, s, t);
  auto rhs = gmp_generator<Rational>(2, 1, Pi1Word{pi1::inverse(pi1::a(1))}, s, t);
  std::cout << "lhs = " << to_string(lhs) << "\n";
  std::cout << "rhs = " << to_string(rhs) << "\n";

  IdealEngine const engine(s, t);
  auto              r = engine.member(lhs - rhs, MembershipOptions{6});
  if (!r.member) {
    std::cout << "not found at window 6\n";
    return 1;
  }
  std::cout << "lhs - rhs lies in the relation ideal:\n";
  for (auto const& e : r.certificate) {
    std::cout << "  " << to_string(e) << "\n";
  }
  std::cout << "certificate re-expands: " << (engine.verify(lhs - rhs, r.certificate) ? "yes" : "no")
            << "\n";
  return 0;
}
