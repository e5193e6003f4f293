// The constructive maps behind the identities, with checkers that replay
// each one exhaustively on its stated domain:
//
//  - the weight-preserving sign-reversing involution on Enj: left-multiply
//    by (sigma(i), sigma(i+1)) at the first position i with sigma(i) != i+1
//  - the reduction Unj -> D_{n-1,j-1} (drop the letter 1, shift down)
//  - flip = R o sigma^{-1} o R restricted to Dnj_tilde -> Dnj
//  - the inductive perfect matching on the mixed-sign windows Bn_mixed
//  - the recursion maps for the type-B right-to-left-minimum sum: peeling
//    |sigma(n)| = n, the paired slots 2k-1/2k, and (even n) position n-1

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "derange/families.hpp"
#include "derange/multipoly.hpp"
#include "derange/permutation.hpp"
#include "derange/signed_permutation.hpp"

namespace derange {

// Smallest i with sigma(i) != i+1; undefined only on the long cycle 23...n1.
inline int i_sigma(const Permutation& s) {
  for (int i = 1; i < s.size(); ++i)
    if (s(i) != i + 1) return i;
  throw std::invalid_argument("i_sigma undefined on the long cycle");
}

inline Permutation wpsr_phi(const Permutation& s) {
  const int i = i_sigma(s);
  return apply_transposition(s(i), s(i + 1), s);
}

// Unj (j >= 2) -> D_{n-1,j-1}: drop position 2 (the letter 1), shift down.
inline Permutation psi_reduce(const Permutation& s) {
  const int n = s.size();
  if (n < 3 || s(2) != 1 || s(1) == 2 || !is_derangement(s))
    throw std::invalid_argument("psi_reduce needs a U-type derangement with sigma(2) = 1");
  std::vector<int> w(n - 1);
  w[0] = s(1) - 1;
  for (int i = 2; i <= n - 1; ++i) w[i - 1] = s(i + 1) - 1;
  return Permutation(std::move(w));
}

// x_i -> x_{i+1}, y_i -> y_{i+1}: every letter of the reduced word sits one
// below its preimage, so both statistic alphabets shift together.
inline std::map<Var, Poly> shift_vars_up(int n) {
  std::map<Var, Poly> bind;
  for (int i = 1; i <= n; ++i) {
    bind[Var::x(i)] = Poly(Var::x(i + 1));
    bind[Var::y(i)] = Poly(Var::y(i + 1));
  }
  return bind;
}

struct SliceReport {
  int n = 0, j = 0;
  std::size_t e_size = 0, u_size = 0;
  bool phi_ok = false;   // involution on Enj: fixed-point free, weight-negating,
                         // minima/excedance values preserved
  bool psi_ok = false;   // j >= 2: bijection onto D_{n-1,j-1} with w = x1 * shifted w'
                         // j == 1: the single long cycle carries -x1 y2...yn
  bool flip_ok = false;  // flip maps Dnj_tilde onto Dnj
  bool pass() const { return phi_ok && psi_ok && flip_ok; }
};

inline SliceReport check_slice_bijections(int n, int j) {
  SliceReport r;
  r.n = n;
  r.j = j;

  // n = 2 has no E-part: the one derangement is the 2-cycle, which is U-type
  const auto e = n >= 3 ? elements({FamilyKind::Enj, n, j}) : std::vector<Permutation>{};
  r.e_size = e.size();
  r.phi_ok = true;
  for (const auto& s : e) {
    const Permutation t = wpsr_phi(s);
    const auto st = statistics(s);
    const auto tt = statistics(t);
    r.phi_ok = r.phi_ok && t != s && wpsr_phi(t) == s && is_derangement(t) && t(n) == j &&
               !in_u_slice(t, j) && st.rlm_v == tt.rlm_v && st.exc_v == tt.exc_v &&
               weight_of(t, WeightSpec::sign_cyc_rlmv_excv) ==
                   -weight_of(s, WeightSpec::sign_cyc_rlmv_excv);
  }

  const auto u = elements({FamilyKind::Unj, n, j});
  r.u_size = u.size();
  if (j == 1) {
    Monomial m = Monomial::power(Var::x(1), 1);
    for (int i = 2; i <= n; ++i) m *= Monomial::power(Var::y(i), 1);
    r.psi_ok = u.size() == 1 &&
               weight_of(u.front(), WeightSpec::sign_cyc_rlmv_excv) == Poly(m, Int(-1));
  } else {
    const auto target = elements({FamilyKind::Dnj, n - 1, j - 1});
    std::set<Permutation> image;
    const auto shift = shift_vars_up(n);
    bool ok = true;
    for (const auto& s : u) {
      const Permutation red = psi_reduce(s);
      image.insert(red);
      ok = ok && weight_of(s, WeightSpec::sign_cyc_rlmv_excv) ==
                     Poly(Var::x(1)) *
                         weight_of(red, WeightSpec::sign_cyc_rlmv_excv).subst(shift);
    }
    r.psi_ok = ok && image.size() == u.size() &&
               image == std::set<Permutation>(target.begin(), target.end());
  }

  const auto tilde = elements({FamilyKind::Dnj_tilde, n, j});
  const auto plain = elements({FamilyKind::Dnj, n, j});
  std::set<Permutation> flipped;
  for (const auto& s : tilde) flipped.insert(flip(s));
  r.flip_ok = flipped.size() == tilde.size() &&
              flipped == std::set<Permutation>(plain.begin(), plain.end());
  return r;
}

// ---------------------------------------------------------------------------
// The perfect matching on mixed-sign windows

struct MatchReport {
  std::string label;
  std::size_t domain_size = 0;
  std::size_t fixed_points = 0;
  std::vector<std::pair<SignedPermutation, SignedPermutation>> pairs;
  bool covers = false;         // every domain element in exactly one pair
  bool weight_cancels = false; // excedance weights sum to zero pairwise
  bool images_match = false;   // both windows of a pair hold the same value set
  bool pass() const {
    return covers && weight_cancels && images_match && fixed_points == 0;
  }
};

// Pairs covering Bn_mixed, built by induction on n.  A window whose only
// sign-breaking letter is -n (resp. +n) is matched with its last-two-entries
// swap; a window built on a mixed tail inherits the tail's partner.
inline std::vector<std::pair<SignedPermutation, SignedPermutation>> typeb_matching_pairs(int n) {
  if (n < 2) throw std::invalid_argument("matching needs n >= 2");
  if (n == 2)
    return {{SignedPermutation::parse("-1,2"), SignedPermutation::parse("2,-1")},
            {SignedPermutation::parse("1,-2"), SignedPermutation::parse("-2,1")}};
  std::vector<std::pair<SignedPermutation, SignedPermutation>> out;
  for (int a : {-n, n}) {
    const FamilySpec tails{a < 0 ? FamilyKind::Bn_plus : FamilyKind::Bn_minus, n - 1, 0};
    for_each_signed(tails, [&](const SignedPermutation& tau) {
      for (int k = 1; k <= n; ++k) {
        const SignedPermutation s = insert(a, k, tau);
        const SignedPermutation s2 = apply_signed_transposition(s(n - 1), s(n), s);
        if (s < s2) out.emplace_back(s, s2);
      }
    });
  }
  for (const auto& [t1, t2] : typeb_matching_pairs(n - 1))
    for (int a : {-n, n})
      for (int k = 1; k <= n; ++k) out.emplace_back(insert(a, k, t1), insert(a, k, t2));
  return out;
}

inline MatchReport typeb_matching(int n) {
  MatchReport r;
  r.label = "Bn_mixed matching n=" + std::to_string(n);
  r.pairs = typeb_matching_pairs(n);

  std::map<SignedPermutation, int> hits;
  for_each_signed({FamilyKind::Bn_mixed, n, 0},
                  [&](const SignedPermutation& s) { hits[s] = 0; });
  r.domain_size = hits.size();

  r.weight_cancels = true;
  r.images_match = true;
  bool in_domain = true;
  for (const auto& [u, v] : r.pairs) {
    auto iu = hits.find(u), iv = hits.find(v);
    if (iu == hits.end() || iv == hits.end()) {
      in_domain = false;
      continue;
    }
    ++iu->second;
    ++iv->second;
    r.weight_cancels = r.weight_cancels &&
                       (weight_of(u, WeightSpec::typeb_exc) +
                        weight_of(v, WeightSpec::typeb_exc)).is_zero();
    std::multiset<int> im_u(u.window().begin(), u.window().end());
    std::multiset<int> im_v(v.window().begin(), v.window().end());
    r.images_match = r.images_match && im_u == im_v;
  }
  r.covers = in_domain && 2 * r.pairs.size() == r.domain_size;
  for (const auto& [s, c] : hits) {
    (void)s;
    if (c != 1) r.covers = false;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Recursion maps for the type-B right-to-left-minimum sum

struct TypeBRecursionReport {
  int n = 0;
  bool phi1_bijective = false, phi1_weights = false;
  bool cnk_ok = false;          // involution, minima preserved, weights cancel
  bool phi2_bijective = true, phi2_weights = true;  // even n only
  bool dprime_sum_ok = false;   // odd n: 0; even n: (1 + s t^n) Q_{B_{n-1}}
  bool recurrence_ok = false;
  bool pass() const {
    return phi1_bijective && phi1_weights && cnk_ok && phi2_bijective && phi2_weights &&
           dprime_sum_ok && recurrence_ok;
  }
};

inline TypeBRecursionReport check_typeb_recursion(int n) {
  if (n < 2) throw std::invalid_argument("recursion check needs n >= 2");
  TypeBRecursionReport r;
  r.n = n;
  const Poly q_prev = weighted_sum({FamilyKind::Bn, n - 1, 0}, WeightSpec::typeb_rlm);
  const Poly st_n(Monomial{{Var::s(), 1}, {Var::t(), n}});

  // phi1: strip |sigma(n)| = n
  std::set<std::pair<int, SignedPermutation>> seen;
  bool w1 = true;
  for_each_signed({FamilyKind::Bn_prime, n, 0}, [&](const SignedPermutation& s) {
    std::vector<int> head(s.window().begin(), s.window().end() - 1);
    const SignedPermutation tau(head);
    seen.insert({s(n), tau});
    const Poly w = weight_of(s, WeightSpec::typeb_rlm);
    const Poly wt = weight_of(tau, WeightSpec::typeb_rlm);
    w1 = w1 && (s(n) == n ? w == -Poly(Var::y(n)) * wt : w == -st_n * wt);
  });
  std::size_t bn1 = 0;
  for_each_signed({FamilyKind::Bn, n - 1, 0}, [&](const SignedPermutation&) { ++bn1; });
  r.phi1_bijective = seen.size() == 2 * bn1;
  r.phi1_weights = w1;

  // slot-pair involutions on the Cnk slices
  const int kmax = (n % 2 == 1) ? (n - 1) / 2 : (n - 2) / 2;
  r.cnk_ok = true;
  for (int k = 1; k <= kmax; ++k) {
    Poly slice_sum;
    for_each_signed({FamilyKind::Cnk, n, k}, [&](const SignedPermutation& s) {
      const SignedPermutation s2 =
          apply_signed_transposition(s(2 * k - 1), s(2 * k), s);
      const SignedPermutation back =
          apply_signed_transposition(s2(2 * k - 1), s2(2 * k), s2);
      const Poly w = weight_of(s, WeightSpec::typeb_rlm);
      const Poly w2 = weight_of(s2, WeightSpec::typeb_rlm);
      r.cnk_ok = r.cnk_ok && back == s && s2 != s &&
                 type_b_statistics(s2).rlm_b == type_b_statistics(s).rlm_b && w2 == -w;
      slice_sum += w;
    });
    r.cnk_ok = r.cnk_ok && slice_sum.is_zero();
  }

  // phi2: even n, strip |sigma(n-1)| = n off the leftover block
  if (n % 2 == 0) {
    std::set<std::pair<int, SignedPermutation>> seen2;
    bool w2 = true;
    for_each_signed({FamilyKind::Bn_E, n, 0}, [&](const SignedPermutation& s) {
      std::vector<int> rest;
      for (int i = 1; i <= n; ++i)
        if (i != n - 1) rest.push_back(s(i));
      const SignedPermutation tau(rest);
      seen2.insert({s(n - 1), tau});
      const Poly w = weight_of(s, WeightSpec::typeb_rlm);
      const Poly wt = weight_of(tau, WeightSpec::typeb_rlm);
      w2 = w2 && (s(n - 1) == n ? w == wt : w == st_n * wt);
    });
    r.phi2_bijective = seen2.size() == 2 * bn1;
    r.phi2_weights = w2;
  }

  const Poly dprime = weighted_sum({FamilyKind::Bn_dprime, n, 0}, WeightSpec::typeb_rlm);
  r.dprime_sum_ok = (n % 2 == 1) ? dprime.is_zero() : dprime == (Poly(1) + st_n) * q_prev;

  const Poly q_n = weighted_sum({FamilyKind::Bn, n, 0}, WeightSpec::typeb_rlm);
  const Poly factor =
      (n % 2 == 1) ? -(Poly(Var::y(n)) + st_n) : -(Poly(Var::y(n)) - 1);
  r.recurrence_ok = q_n == factor * q_prev;
  return r;
}

}  // namespace derange
