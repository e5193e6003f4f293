// Signed permutations in window notation: (sigma(1),...,sigma(n)) with the
// absolute values forming a permutation of [n].  Provides the type-B
// statistics: excedance/anti-excedance sets, right-to-left minima over the
// positive letters, negative-entry count and magnitude sum, and the cycle
// count of the underlying absolute permutation.

#pragma once

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "derange/permutation.hpp"

namespace derange {

class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> window) : w_(std::move(window)) {
    const int n = static_cast<int>(w_.size());
    std::vector<char> seen(n + 1, 0);
    for (int v : w_) {
      const int m = std::abs(v);
      if (m < 1 || m > n || seen[m]) throw std::invalid_argument("not a signed permutation window");
      seen[m] = 1;
    }
  }

  static SignedPermutation identity(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    return SignedPermutation(std::move(w));
  }

  // "-6,2,4,-3,1,5,8,-7"
  static SignedPermutation parse(std::string_view text) {
    std::vector<int> w;
    std::size_t p = 0;
    while (p <= text.size() && !text.empty()) {
      std::size_t q = text.find(',', p);
      if (q == std::string_view::npos) q = text.size();
      w.push_back(std::stoi(std::string(text.substr(p, q - p))));
      p = q + 1;
      if (q == text.size()) break;
    }
    return SignedPermutation(std::move(w));
  }

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[i - 1]; }  // 1-based
  const std::vector<int>& window() const { return w_; }

  Permutation abs() const {
    std::vector<int> w(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i) w[i] = std::abs(w_[i]);
    return Permutation(std::move(w));
  }

  SignedPermutation negate_all() const {
    std::vector<int> w(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i) w[i] = -w_[i];
    return SignedPermutation(std::move(w));
  }

  bool all_positive() const {
    return std::all_of(w_.begin(), w_.end(), [](int v) { return v > 0; });
  }
  bool all_negative() const {
    return !w_.empty() && std::all_of(w_.begin(), w_.end(), [](int v) { return v < 0; });
  }
  bool mixed() const { return !all_positive() && !all_negative(); }

  bool operator==(const SignedPermutation&) const = default;
  auto operator<=>(const SignedPermutation&) const = default;

  std::string str() const {
    std::string out;
    for (int i = 0; i < size(); ++i) {
      if (i) out += ',';
      out += std::to_string(w_[i]);
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const SignedPermutation& p) {
    return os << p.str();
  }

 private:
  std::vector<int> w_;
};

// Swaps the window values u and v (and their negatives): the left product
// with the signed transposition (u,v).
inline SignedPermutation apply_signed_transposition(int u, int v, const SignedPermutation& s) {
  if (std::abs(u) == std::abs(v)) throw std::invalid_argument("bad signed transposition");
  std::vector<int> w = s.window();
  for (int& e : w) {
    if (e == u)
      e = v;
    else if (e == v)
      e = u;
    else if (e == -u)
      e = -v;
    else if (e == -v)
      e = -u;
  }
  return SignedPermutation(std::move(w));
}

// Cycles of |sigma| with each element |sigma(i)| rewritten as sigma(i),
// e.g. window -6,2,4,-3,1,5,8,-7 -> (1,-6,5)(2)(-3,4)(-7,8).
struct SignedCycles {
  std::vector<std::vector<int>> cycles;

  std::string str() const {
    std::string out;
    for (const auto& c : cycles) {
      out += '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c[i]);
      }
      out += ')';
    }
    return out;
  }
};

inline SignedCycles cycles_of(const SignedPermutation& s) {
  SignedCycles out;
  const CycleDecomposition plain = cycles_of(s.abs());
  for (const auto& c : plain.cycles) {
    std::vector<int> sc(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int pred = c[(i + c.size() - 1) % c.size()];  // c[i] == |sigma(pred)|
      sc[i] = s(pred);
    }
    out.cycles.push_back(std::move(sc));
  }
  return out;
}

struct TypeBStats {
  std::vector<int> exc_b;    // j = |sigma(i)| with sigma(j) = -j or sigma(j) > sigma(i)
  std::vector<int> anexc_b;  // the complementary letters (fixed points included here)
  std::vector<int> rlm_b;    // positive sigma(i) smaller in magnitude than everything after it
  int neg = 0;               // number of negative window entries
  long long nsum = 0;        // sum of |sigma(i)| over the negative entries
  int cyc = 0;               // cycles of |sigma|
};

inline TypeBStats type_b_statistics(const SignedPermutation& s) {
  TypeBStats st;
  const int n = s.size();
  for (int i = 1; i <= n; ++i) {
    const int v = s(i);
    const int j = std::abs(v);
    if (s(j) == -j || s(j) > v)
      st.exc_b.push_back(j);
    else
      st.anexc_b.push_back(j);
    if (v < 0) {
      ++st.neg;
      st.nsum += j;
    } else {
      bool rlm = true;
      for (int k = i + 1; k <= n && rlm; ++k)
        if (std::abs(s(k)) < v) rlm = false;
      if (rlm) st.rlm_b.push_back(v);
    }
  }
  std::sort(st.exc_b.begin(), st.exc_b.end());
  std::sort(st.anexc_b.begin(), st.anexc_b.end());
  std::sort(st.rlm_b.begin(), st.rlm_b.end());
  st.cyc = static_cast<int>(cycles_of(s).cycles.size());
  return st;
}

// Window of length n built from a in {n,-n}, a slot k in [n], and tau of
// size n-1: sigma(k) = a, sigma(n) = tau(k) when k < n, the rest unchanged.
// Every signed permutation of [n] arises exactly once this way.
inline SignedPermutation insert(int a, int k, const SignedPermutation& tau) {
  const int n = tau.size() + 1;
  if (std::abs(a) != n) throw std::invalid_argument("inserted letter must have magnitude n");
  if (k < 1 || k > n) throw std::invalid_argument("insert slot out of range");
  std::vector<int> w(n);
  for (int i = 1; i < n; ++i) w[i - 1] = tau(i);
  if (k < n) {
    w[n - 1] = tau(k);
    w[k - 1] = a;
  } else {
    w[n - 1] = a;
  }
  return SignedPermutation(std::move(w));
}

}  // namespace derange
