// Expands the three-variable fraction, specializes it down to one marker,
// and shows the resulting polynomials annihilating the displayed family.

#include <cstdio>

#include "derange/orthopoly.hpp"
#include "derange/series.hpp"

using namespace derange;

int main() {
  std::printf("moments of the full fraction:\n");
  const auto mu = jf_moments(jf_full(), 5);
  for (std::size_t k = 0; k < mu.size(); ++k)
    std::printf("  mu_%zu = %s\n", k, mu[k].str().c_str());

  std::printf("\nsame moments with cycles and excedances switched off:\n");
  const auto one = jf_moments(jf_dnx(Var::a()), 5);
  for (std::size_t k = 0; k < one.size(); ++k)
    std::printf("  mu_%zu = %s\n", k, one[k].str().c_str());

  std::printf("\nthe family those moments are orthogonal to:\n");
  const auto p = corecursive_P(4);
  for (std::size_t k = 0; k < p.size(); ++k)
    std::printf("  P_%zu = %s\n", k, p[k].str().c_str());

  const MomentFunctional L = MomentFunctional::from_fraction(8);
  std::printf("\nfunctional applied to X^k P_3:\n");
  Poly xk(1);
  for (int k = 0; k <= 3; ++k) {
    std::printf("  k=%d: %s\n", k, L.apply(xk * p[3]).str().c_str());
    xk *= Poly(Var::X());
  }
  return 0;
}
