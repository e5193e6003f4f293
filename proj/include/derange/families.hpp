// Enumeration of the permutation families the identities range over, plus
// the weight assignments summed across them.
//
// Type A (one-line words, lexicographic order):
//   Sn, Dn          all permutations / derangements of [n]
//   Dnj             derangements with sigma(n) = j
//   Dnj_tilde       derangements with sigma(n+1-j) = 1
//   Dnj_bar         derangements with sigma(j) = n
//   Unj             j = 1: the single n-cycle 23...n1;
//                   j >= 2: sigma in Dnj with sigma(2) = 1 and sigma(1) != 2
//   Enj             Dnj minus Unj (n >= 3)
//
// Type B (windows, lexicographic with -n < ... < -1 < 1 < ... < n):
//   Bn, Bn_plus, Bn_minus, Bn_mixed   all / no / only / some negative letters
//   Bn_prime        |sigma(n)| = n
//   Bn_dprime       |sigma(n)| != n
//   Cnk             |sigma(n)| != n and n sits at position 2k-1 or 2k
//   Bn_E            n even, |sigma(n)| != n and |sigma(n-1)| = n

#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "derange/multipoly.hpp"
#include "derange/permutation.hpp"
#include "derange/signed_permutation.hpp"

namespace derange {

enum class FamilyKind {
  Sn,
  Dn,
  Dnj,
  Dnj_tilde,
  Dnj_bar,
  Unj,
  Enj,
  Bn,
  Bn_plus,
  Bn_minus,
  Bn_mixed,
  Bn_prime,
  Bn_dprime,
  Cnk,
  Bn_E,
};

inline bool is_type_b(FamilyKind k) { return k >= FamilyKind::Bn; }
inline bool is_sliced(FamilyKind k) {
  switch (k) {
    case FamilyKind::Dnj:
    case FamilyKind::Dnj_tilde:
    case FamilyKind::Dnj_bar:
    case FamilyKind::Unj:
    case FamilyKind::Enj:
    case FamilyKind::Cnk:
      return true;
    default:
      return false;
  }
}

inline std::string family_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::Sn: return "Sn";
    case FamilyKind::Dn: return "Dn";
    case FamilyKind::Dnj: return "Dnj";
    case FamilyKind::Dnj_tilde: return "Dnj_tilde";
    case FamilyKind::Dnj_bar: return "Dnj_bar";
    case FamilyKind::Unj: return "Unj";
    case FamilyKind::Enj: return "Enj";
    case FamilyKind::Bn: return "Bn";
    case FamilyKind::Bn_plus: return "Bn_plus";
    case FamilyKind::Bn_minus: return "Bn_minus";
    case FamilyKind::Bn_mixed: return "Bn_mixed";
    case FamilyKind::Bn_prime: return "Bn_prime";
    case FamilyKind::Bn_dprime: return "Bn_dprime";
    case FamilyKind::Cnk: return "Cnk";
    case FamilyKind::Bn_E: return "Bn_E";
  }
  throw std::invalid_argument("unknown family kind");
}

inline std::optional<FamilyKind> family_from_name(const std::string& name) {
  static const std::vector<FamilyKind> all = {
      FamilyKind::Sn,       FamilyKind::Dn,       FamilyKind::Dnj,      FamilyKind::Dnj_tilde,
      FamilyKind::Dnj_bar,  FamilyKind::Unj,      FamilyKind::Enj,      FamilyKind::Bn,
      FamilyKind::Bn_plus,  FamilyKind::Bn_minus, FamilyKind::Bn_mixed, FamilyKind::Bn_prime,
      FamilyKind::Bn_dprime, FamilyKind::Cnk,     FamilyKind::Bn_E};
  for (FamilyKind k : all)
    if (family_name(k) == name) return k;
  return std::nullopt;
}

// j doubles as the slot index k for Cnk.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Sn;
  int n = 0;
  int j = 0;
};

inline void validate(const FamilySpec& f) {
  if (f.n < 0) throw std::invalid_argument("negative n");
  switch (f.kind) {
    case FamilyKind::Sn:
    case FamilyKind::Dn:
    case FamilyKind::Bn:
    case FamilyKind::Bn_plus:
    case FamilyKind::Bn_minus:
    case FamilyKind::Bn_mixed:
      break;
    case FamilyKind::Dnj:
    case FamilyKind::Dnj_tilde:
    case FamilyKind::Dnj_bar:
    case FamilyKind::Unj:
      if (f.n < 2 || f.j < 1 || f.j > f.n - 1)
        throw std::invalid_argument("slice index j must satisfy 1 <= j <= n-1");
      break;
    case FamilyKind::Enj:
      if (f.n < 3 || f.j < 1 || f.j > f.n - 1)
        throw std::invalid_argument("Enj needs n >= 3 and 1 <= j <= n-1");
      break;
    case FamilyKind::Bn_prime:
    case FamilyKind::Bn_dprime:
      if (f.n < 1) throw std::invalid_argument("need n >= 1");
      break;
    case FamilyKind::Cnk: {
      if (f.n < 3) throw std::invalid_argument("Cnk needs n >= 3");
      const int kmax = (f.n % 2 == 1) ? (f.n - 1) / 2 : (f.n - 2) / 2;
      if (f.j < 1 || f.j > kmax) throw std::invalid_argument("Cnk slot k out of range");
      break;
    }
    case FamilyKind::Bn_E:
      if (f.n < 2 || f.n % 2 != 0) throw std::invalid_argument("Bn_E needs even n >= 2");
      break;
  }
}

namespace detail {

// Backtracking generator for one-line words, lexicographic.  pin[i] != 0
// forces sigma(i); derangement forbids fixed points; accept filters leaves.
struct WordGen {
  int n = 0;
  bool derangement = false;
  std::vector<int> pin;  // 1-based, 0 = free
  std::function<bool(int, int)> allow;             // position, value
  std::function<bool(const Permutation&)> accept;  // leaf filter

  void run(const std::function<void(const Permutation&)>& fn) const {
    std::vector<int> word(n);
    std::vector<char> used(n + 1, 0);
    rec(1, word, used, fn);
  }

 private:
  void rec(int pos, std::vector<int>& word, std::vector<char>& used,
           const std::function<void(const Permutation&)>& fn) const {
    if (pos > n) {
      Permutation p(word);
      if (!accept || accept(p)) fn(p);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      if (pin[pos] != 0 && v != pin[pos]) continue;
      if (derangement && v == pos) continue;
      if (allow && !allow(pos, v)) continue;
      used[v] = 1;
      word[pos - 1] = v;
      rec(pos + 1, word, used, fn);
      used[v] = 0;
    }
  }
};

// Same for windows; candidate values -n..-1,1..n in integer order.
struct WindowGen {
  int n = 0;
  std::function<bool(int, int)> allow;
  std::function<bool(const SignedPermutation&)> accept;

  void run(const std::function<void(const SignedPermutation&)>& fn) const {
    std::vector<int> win(n);
    std::vector<char> used(n + 1, 0);
    rec(1, win, used, fn);
  }

 private:
  void rec(int pos, std::vector<int>& win, std::vector<char>& used,
           const std::function<void(const SignedPermutation&)>& fn) const {
    if (pos > n) {
      SignedPermutation p(win);
      if (!accept || accept(p)) fn(p);
      return;
    }
    for (int v = -n; v <= n; ++v) {
      if (v == 0 || used[std::abs(v)]) continue;
      if (allow && !allow(pos, v)) continue;
      used[std::abs(v)] = 1;
      win[pos - 1] = v;
      rec(pos + 1, win, used, fn);
      used[std::abs(v)] = 0;
    }
  }
};

}  // namespace detail

// The single n-cycle 23...n1.
inline Permutation long_cycle_word(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n - 1; ++i) w[i] = i + 2;
  w[n - 1] = 1;
  return Permutation(std::move(w));
}

// Membership of sigma in Unj, assuming sigma in Dnj already.
inline bool in_u_slice(const Permutation& s, int j) {
  if (j == 1) return s == long_cycle_word(s.size());
  return s(2) == 1 && s(1) != 2;
}

inline void for_each(const FamilySpec& f, const std::function<void(const Permutation&)>& fn) {
  validate(f);
  if (is_type_b(f.kind)) throw std::invalid_argument("type-B family in type-A enumeration");
  if (f.kind == FamilyKind::Unj && f.j == 1) {
    fn(long_cycle_word(f.n));
    return;
  }
  detail::WordGen g;
  g.n = f.n;
  g.pin.assign(f.n + 1, 0);
  switch (f.kind) {
    case FamilyKind::Sn:
      break;
    case FamilyKind::Dn:
      g.derangement = true;
      break;
    case FamilyKind::Dnj:
      g.derangement = true;
      g.pin[f.n] = f.j;
      break;
    case FamilyKind::Dnj_tilde:
      g.derangement = true;
      g.pin[f.n + 1 - f.j] = 1;
      break;
    case FamilyKind::Dnj_bar:
      g.derangement = true;
      g.pin[f.j] = f.n;
      break;
    case FamilyKind::Unj:
      g.derangement = true;
      g.pin[f.n] = f.j;
      g.pin[2] = 1;
      g.allow = [](int pos, int v) { return pos != 1 || v != 2; };
      break;
    case FamilyKind::Enj:
      g.derangement = true;
      g.pin[f.n] = f.j;
      g.accept = [j = f.j](const Permutation& p) { return !in_u_slice(p, j); };
      break;
    default:
      throw std::invalid_argument("unhandled type-A family");
  }
  g.run(fn);
}

inline void for_each_signed(const FamilySpec& f,
                            const std::function<void(const SignedPermutation&)>& fn) {
  validate(f);
  if (!is_type_b(f.kind)) throw std::invalid_argument("type-A family in type-B enumeration");
  detail::WindowGen g;
  g.n = f.n;
  switch (f.kind) {
    case FamilyKind::Bn:
      break;
    case FamilyKind::Bn_plus:
      g.allow = [](int, int v) { return v > 0; };
      break;
    case FamilyKind::Bn_minus:
      g.allow = [](int, int v) { return v < 0; };
      break;
    case FamilyKind::Bn_mixed:
      g.accept = [](const SignedPermutation& p) { return p.mixed(); };
      break;
    case FamilyKind::Bn_prime:
      g.allow = [n = f.n](int pos, int v) { return pos != n || std::abs(v) == n; };
      break;
    case FamilyKind::Bn_dprime:
      g.allow = [n = f.n](int pos, int v) { return pos != n || std::abs(v) != n; };
      break;
    case FamilyKind::Cnk: {
      const int lo = 2 * f.j - 1, hi = 2 * f.j;
      g.accept = [n = f.n, lo, hi](const SignedPermutation& p) {
        return std::abs(p(n)) != n && (std::abs(p(lo)) == n || std::abs(p(hi)) == n);
      };
      break;
    }
    case FamilyKind::Bn_E:
      g.accept = [n = f.n](const SignedPermutation& p) {
        return std::abs(p(n)) != n && std::abs(p(n - 1)) == n;
      };
      break;
    default:
      throw std::invalid_argument("unhandled type-B family");
  }
  g.run(fn);
}

inline std::vector<Permutation> elements(const FamilySpec& f) {
  std::vector<Permutation> out;
  for_each(f, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

inline std::vector<SignedPermutation> signed_elements(const FamilySpec& f) {
  std::vector<SignedPermutation> out;
  for_each_signed(f, [&](const SignedPermutation& p) { out.push_back(p); });
  return out;
}

// ---------------------------------------------------------------------------
// Weights

enum class WeightSpec {
  sign_cyc_rlmv_excv,  // (-1)^cyc prod_{v in RLMv} x_v prod_{v in EXCv} y_v
  sign_cyc_rlmi_exci,  // (-1)^cyc prod_{i in RLMi} x_i prod_{i in EXCi} y_i
  inv_rlmv_excv,       // (-1)^inv in place of (-1)^cyc
  inv_rlmi_exci,
  lambda_x_y,          // lambda^cyc x^rlm y^exc (univariate)
  sign_cyc_exc_x,      // (-1)^cyc x^exc
  inv_exc_x,           // (-1)^inv x^exc
  sign_cyc_exci_vars,  // (-1)^cyc prod_{i in EXCi} x_i
  sign_cyc_rlmv_y,     // (-1)^cyc prod_{v in RLMv} y_v
  qinv_rlmv_y,         // q^inv prod_{v in RLMv} y_v
  typeb_exc,           // (-1)^cyc s^neg t^nsum prod_{j in EXC_B} x_j
  typeb_rlm,           // (-1)^cyc s^neg t^nsum prod_{j in RLM_B} y_j
};

inline Poly weight_of(const Permutation& p, WeightSpec w) {
  const StatProfile st = statistics(p);
  const Int sign_cyc = (st.cyc % 2 == 0) ? 1 : -1;
  const Int sign_inv = (st.inv % 2 == 0) ? 1 : -1;
  Monomial m;
  switch (w) {
    case WeightSpec::sign_cyc_rlmv_excv:
    case WeightSpec::inv_rlmv_excv:
      for (int v : st.rlm_v) m *= Monomial::power(Var::x(v), 1);
      for (int v : st.exc_v) m *= Monomial::power(Var::y(v), 1);
      return Poly(m, w == WeightSpec::sign_cyc_rlmv_excv ? sign_cyc : sign_inv);
    case WeightSpec::sign_cyc_rlmi_exci:
    case WeightSpec::inv_rlmi_exci:
      for (int i : st.rlm_i) m *= Monomial::power(Var::x(i), 1);
      for (int i : st.exc_i) m *= Monomial::power(Var::y(i), 1);
      return Poly(m, w == WeightSpec::sign_cyc_rlmi_exci ? sign_cyc : sign_inv);
    case WeightSpec::lambda_x_y:
      m = Monomial{{Var::lam(), st.cyc},
                   {Var::x(), static_cast<int>(st.rlm_v.size())},
                   {Var::y(), static_cast<int>(st.exc_v.size())}};
      return Poly(m);
    case WeightSpec::sign_cyc_exc_x:
    case WeightSpec::inv_exc_x:
      m = Monomial::power(Var::x(), static_cast<int>(st.exc_v.size()));
      return Poly(m, w == WeightSpec::sign_cyc_exc_x ? sign_cyc : sign_inv);
    case WeightSpec::sign_cyc_exci_vars:
      for (int i : st.exc_i) m *= Monomial::power(Var::x(i), 1);
      return Poly(m, sign_cyc);
    case WeightSpec::sign_cyc_rlmv_y:
      for (int v : st.rlm_v) m *= Monomial::power(Var::y(v), 1);
      return Poly(m, sign_cyc);
    case WeightSpec::qinv_rlmv_y:
      for (int v : st.rlm_v) m *= Monomial::power(Var::y(v), 1);
      m *= Monomial::power(Var::q(), static_cast<int>(st.inv));
      return Poly(m);
    default:
      throw std::invalid_argument("type-B weight applied to a plain permutation");
  }
}

inline Poly weight_of(const SignedPermutation& p, WeightSpec w) {
  const TypeBStats st = type_b_statistics(p);
  const Int sign_cyc = (st.cyc % 2 == 0) ? 1 : -1;
  Monomial m = Monomial{{Var::s(), st.neg}, {Var::t(), static_cast<int>(st.nsum)}};
  switch (w) {
    case WeightSpec::typeb_exc:
      for (int j : st.exc_b) m *= Monomial::power(Var::x(j), 1);
      return Poly(m, sign_cyc);
    case WeightSpec::typeb_rlm:
      for (int j : st.rlm_b) m *= Monomial::power(Var::y(j), 1);
      return Poly(m, sign_cyc);
    default:
      throw std::invalid_argument("type-A weight applied to a signed permutation");
  }
}

inline Poly weighted_sum(const FamilySpec& f, WeightSpec w) {
  Poly total;
  if (is_type_b(f.kind))
    for_each_signed(f, [&](const SignedPermutation& p) { total += weight_of(p, w); });
  else
    for_each(f, [&](const Permutation& p) { total += weight_of(p, w); });
  return total;
}

inline const std::vector<std::pair<std::string, WeightSpec>>& weight_names() {
  static const std::vector<std::pair<std::string, WeightSpec>> names = {
      {"sign_cyc_rlmv_excv", WeightSpec::sign_cyc_rlmv_excv},
      {"sign_cyc_rlmi_exci", WeightSpec::sign_cyc_rlmi_exci},
      {"inv_rlmv_excv", WeightSpec::inv_rlmv_excv},
      {"inv_rlmi_exci", WeightSpec::inv_rlmi_exci},
      {"lambda_x_y", WeightSpec::lambda_x_y},
      {"sign_cyc_exc_x", WeightSpec::sign_cyc_exc_x},
      {"inv_exc_x", WeightSpec::inv_exc_x},
      {"sign_cyc_exci_vars", WeightSpec::sign_cyc_exci_vars},
      {"sign_cyc_rlmv_y", WeightSpec::sign_cyc_rlmv_y},
      {"qinv_rlmv_y", WeightSpec::qinv_rlmv_y},
      {"typeb_exc", WeightSpec::typeb_exc},
      {"typeb_rlm", WeightSpec::typeb_rlm}};
  return names;
}

inline std::optional<WeightSpec> weight_from_name(std::string_view s) {
  for (const auto& [name, w] : weight_names())
    if (name == s) return w;
  return std::nullopt;
}

inline std::string weight_name(WeightSpec w) {
  for (const auto& [name, spec] : weight_names())
    if (spec == w) return name;
  throw std::invalid_argument("unnamed weight");
}

}  // namespace derange
