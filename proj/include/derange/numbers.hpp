// Integer sequences attached to the derangement slices, with the minima
// histogram computed two independent ways: direct enumeration and moment
// expansion of the one-variable continued fraction.

#pragma once

#include <stdexcept>
#include <vector>

#include "derange/families.hpp"
#include "derange/multipoly.hpp"
#include "derange/series.hpp"

namespace derange {

inline Int derangement_d(int n) {
  if (n < 0) throw std::invalid_argument("negative size");
  Int prev = 1, cur = 0;  // d_0, d_1
  if (n == 0) return prev;
  for (int k = 2; k <= n; ++k) {
    Int nxt = (k - 1) * (cur + prev);
    prev = std::move(cur);
    cur = std::move(nxt);
  }
  return cur;
}

// Size of one last-letter slice, independent of which letter: d_{n-1} + d_{n-2}
inline Int dbar(int n) {
  if (n < 2) throw std::invalid_argument("slice sizes start at n = 2");
  return derangement_d(n - 1) + derangement_d(n - 2);
}

// Minima count one below the top: (n-3) + (n-2)^2
inline Int d_sub2(int n) {
  if (n < 3) throw std::invalid_argument("closed form starts at n = 3");
  return Int(n - 3) + Int(n - 2) * (n - 2);
}

// Row n of the minima histogram over derangements: entry k-1 counts words
// with exactly k right-to-left minimum values, k = 1..n-1.
inline std::vector<Int> rlm_row_enum(int n) {
  if (n < 2) throw std::invalid_argument("rows start at n = 2");
  std::vector<Int> row(static_cast<std::size_t>(n) - 1);
  for_each({FamilyKind::Dn, n, 0}, [&](const Permutation& p) {
    row.at(statistics(p).rlm_v.size() - 1) += 1;
  });
  return row;
}

// Same row read off the n-th moment of the one-variable fraction
inline std::vector<Int> rlm_row_cf(int n) {
  if (n < 2) throw std::invalid_argument("rows start at n = 2");
  const Poly mu = jf_moments(jf_dnx(), n).back();
  std::vector<Int> row(static_cast<std::size_t>(n) - 1);
  for (const auto& [k, c] : mu.coefficients_in(Var::x())) {
    if (k < 1 || k > n - 1 || !c.is_constant())
      throw std::logic_error("moment is not a plain minima polynomial");
    row[static_cast<std::size_t>(k) - 1] = c.constant_term();
  }
  return row;
}

inline std::vector<std::vector<Int>> rlm_table(int max_n) {
  std::vector<std::vector<Int>> rows;
  for (int n = 2; n <= max_n; ++n) rows.push_back(rlm_row_enum(n));
  return rows;
}

// Every internal relation between the sequences at once; enumeration appears
// only through the histogram rows so the check stays cheap.
inline bool check_number_relations(int max_n) {
  for (int n = 2; n <= max_n; ++n) {
    if (dbar(n) != derangement_d(n - 1) + derangement_d(n - 2)) return false;
    if (derangement_d(n) != Int(n - 1) * dbar(n)) return false;
    if (n == 3 && dbar(3) != dbar(2)) return false;  // the n-3 term drops out
    if (n >= 4 && dbar(n) != Int(n - 2) * dbar(n - 1) + Int(n - 3) * dbar(n - 2))
      return false;
    const auto row = rlm_row_enum(n);
    if (row != rlm_row_cf(n)) return false;
    Int total = 0;
    for (const Int& v : row) total += v;
    if (total != derangement_d(n)) return false;
    if (row.front() != dbar(n)) return false;
    if (row.back() != 1) return false;
    if (n >= 3 && row[row.size() - 2] != d_sub2(n)) return false;
    if (n >= 4 && d_sub2(n) != d_sub2(n - 1) + 2 * Int(n - 2)) return false;
  }
  // exponential coefficients against the recurrences
  const PowerSeries d = egf_derangements(max_n);
  for (int n = 0; n <= max_n; ++n)
    if (d.count(n) != QPoly(Rat(derangement_d(n)))) return false;
  const PowerSeries d1 = egf_dn1(max_n - 2 >= 0 ? max_n - 2 : 0);
  for (int n = 0; n <= max_n - 2; ++n)
    if (d1.count(n) != QPoly(Rat(dbar(n + 2)))) return false;
  const PowerSeries s2 = ogf_dsub2(max_n - 3 >= 0 ? max_n - 3 : 0);
  for (int n = 0; n <= max_n - 3; ++n)
    if (s2.term(n) != QPoly(Rat(d_sub2(n + 3)))) return false;
  return true;
}

}  // namespace derange
