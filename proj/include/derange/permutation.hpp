// Permutations of [n] in one-line notation and the statistics used
// throughout: excedance positions/values, right-to-left minimum
// positions/values, fixed points, cycle count, inversions.

#pragma once

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace derange {

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word) : w_(std::move(word)) {
    const int n = static_cast<int>(w_.size());
    std::vector<char> seen(n + 1, 0);
    for (int v : w_) {
      if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation word");
      seen[v] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }

  // "4153627" (digits, n <= 9) or "10,2,3,..." (comma separated).
  static Permutation parse(std::string_view text) {
    std::vector<int> w;
    if (text.find(',') == std::string_view::npos) {
      for (char ch : text) {
        if (ch < '1' || ch > '9') throw std::invalid_argument("bad permutation text");
        w.push_back(ch - '0');
      }
    } else {
      std::size_t p = 0;
      while (p <= text.size()) {
        std::size_t q = text.find(',', p);
        if (q == std::string_view::npos) q = text.size();
        w.push_back(std::stoi(std::string(text.substr(p, q - p))));
        p = q + 1;
        if (q == text.size()) break;
      }
    }
    return Permutation(std::move(w));
  }

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[i - 1]; }  // 1-based
  const std::vector<int>& word() const { return w_; }

  Permutation inverse() const {
    std::vector<int> w(w_.size());
    for (int i = 1; i <= size(); ++i) w[w_[i - 1] - 1] = i;
    return Permutation(std::move(w));
  }

  // (a*b)(i) = a(b(i))
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("size mismatch in composition");
    std::vector<int> w(a.size());
    for (int i = 1; i <= a.size(); ++i) w[i - 1] = a(b(i));
    return Permutation(std::move(w));
  }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;  // lexicographic on the word

  std::string str() const {
    std::string out;
    if (size() <= 9) {
      for (int v : w_) out += static_cast<char>('0' + v);
    } else {
      for (int i = 0; i < size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w_[i]);
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.str(); }

 private:
  std::vector<int> w_;
};

// Left-multiplies by the transposition (a,b): swaps the values a and b.
inline Permutation apply_transposition(int a, int b, const Permutation& s) {
  const int n = s.size();
  if (a < 1 || a > n || b < 1 || b > n || a == b)
    throw std::invalid_argument("bad transposition");
  std::vector<int> w = s.word();
  for (int& v : w) {
    if (v == a)
      v = b;
    else if (v == b)
      v = a;
  }
  return Permutation(std::move(w));
}

inline bool same_cycle(const Permutation& s, int a, int b) {
  int v = s(a);
  while (v != a) {
    if (v == b) return true;
    v = s(v);
  }
  return a == b;
}

// Canonical form: each cycle led by its minimum, cycles sorted by leader.
struct CycleDecomposition {
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

inline CycleDecomposition cycles_of(const Permutation& s) {
  CycleDecomposition d;
  const int n = s.size();
  std::vector<char> seen(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    int v = i;
    do {
      seen[v] = 1;
      c.push_back(v);
      v = s(v);
    } while (v != i);
    d.cycles.push_back(std::move(c));
  }
  return d;
}

struct StatProfile {
  std::vector<int> exc_i, exc_v;  // positions i with s(i) > i, and the values s(i)
  std::vector<int> rlm_i, rlm_v;  // right-to-left minima, positions and values
  std::vector<int> fix;
  int cyc = 0;
  long long inv = 0;
};

inline StatProfile statistics(const Permutation& s) {
  StatProfile st;
  const int n = s.size();
  for (int i = 1; i <= n; ++i) {
    const int v = s(i);
    if (v > i) {
      st.exc_i.push_back(i);
      st.exc_v.push_back(v);
    } else if (v == i) {
      st.fix.push_back(i);
    }
    for (int j = i + 1; j <= n; ++j)
      if (s(j) < v) ++st.inv;
  }
  int min_seen = n + 1;
  for (int i = n; i >= 1; --i) {
    if (s(i) < min_seen) {
      min_seen = s(i);
      st.rlm_i.push_back(i);
      st.rlm_v.push_back(min_seen);
    }
  }
  std::reverse(st.rlm_i.begin(), st.rlm_i.end());
  std::sort(st.rlm_v.begin(), st.rlm_v.end());
  std::sort(st.exc_v.begin(), st.exc_v.end());
  st.cyc = static_cast<int>(cycles_of(s).cycles.size());
  return st;
}

inline bool is_derangement(const Permutation& s) {
  for (int i = 1; i <= s.size(); ++i)
    if (s(i) == i) return false;
  return true;
}

// R o s^{-1} o R with R(i) = n+1-i; an involution.
inline Permutation flip(const Permutation& s) {
  const int n = s.size();
  const Permutation inv = s.inverse();
  std::vector<int> w(n);
  for (int i = 1; i <= n; ++i) w[i - 1] = n + 1 - inv(n + 1 - i);
  return Permutation(std::move(w));
}

}  // namespace derange
