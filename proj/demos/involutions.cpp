// Walks one derangement slice: shows the sign-reversing pairs on the E-part,
// the reduction chain on the U-part, and the surviving product weight.

#include <cstdio>

#include "derange/bijections.hpp"
#include "derange/families.hpp"
#include "derange/identities.hpp"

using namespace derange;

int main() {
  const int n = 5, j = 3;
  std::printf("slice: derangements of %d with last letter %d\n\n", n, j);

  Poly total;
  std::printf("E-part, matched in pairs:\n");
  for (const auto& s : elements({FamilyKind::Enj, n, j})) {
    const Permutation t = wpsr_phi(s);
    const Poly w = weight_of(s, WeightSpec::sign_cyc_rlmv_excv);
    total += w;
    if (s < t)
      std::printf("  %s <-> %s   (%s) + (%s) = 0\n", s.str().c_str(), t.str().c_str(),
                  w.str().c_str(), weight_of(t, WeightSpec::sign_cyc_rlmv_excv).str().c_str());
  }
  std::printf("  E-part sum: %s\n\n", total.str().c_str());

  std::printf("U-part, reduced one letter at a time:\n");
  for (const auto& s : elements({FamilyKind::Unj, n, j})) {
    Permutation cur = s;
    std::printf("  %s", cur.str().c_str());
    // keep peeling while the word stays U-type with last letter above 1
    while (cur.size() > 2 && cur(cur.size()) > 1 && in_u_slice(cur, cur(cur.size()))) {
      cur = psi_reduce(cur);
      std::printf(" -> %s", cur.str().c_str());
    }
    std::printf("   weight %s\n",
                weight_of(s, WeightSpec::sign_cyc_rlmv_excv).str().c_str());
    total += weight_of(s, WeightSpec::sign_cyc_rlmv_excv);
  }

  std::printf("\nslice sum: %s\n", total.str().c_str());
  std::printf("catalog:   %s\n", identity_rhs("PZ1", n, j).str().c_str());
  return 0;
}
