// Truncated power series over rational-coefficient polynomials, the
// generating-function presets used by the counting layer, and J-fraction
// moment expansion via the Motzkin-path transfer recurrence.

#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "derange/families.hpp"
#include "derange/multipoly.hpp"

namespace derange {

enum class Flavor { ogf, egf };

inline Rat factorial_rat(int n) {
  Rat r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Coefficients are stored as plain t^n coefficients; count(n) undoes the
// exponential normalization when the flavor calls for it.
class PowerSeries {
 public:
  PowerSeries(Flavor f, std::vector<QPoly> coeffs) : flavor_(f), c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("series needs at least the constant term");
  }

  Flavor flavor() const { return flavor_; }
  int order() const { return static_cast<int>(c_.size()) - 1; }

  const QPoly& term(int n) const {
    if (n < 0 || n > order()) throw std::out_of_range("series term out of range");
    return c_[static_cast<std::size_t>(n)];
  }

  QPoly count(int n) const {
    return flavor_ == Flavor::egf ? term(n) * QPoly(factorial_rat(n)) : term(n);
  }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    return combine(a, b, 1);
  }
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    return combine(a, b, -1);
  }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    require_same(a, b);
    const int ord = std::min(a.order(), b.order());
    std::vector<QPoly> c(static_cast<std::size_t>(ord) + 1);
    for (int n = 0; n <= ord; ++n)
      for (int k = 0; k <= n; ++k) c[n] += a.term(k) * b.term(n - k);
    return PowerSeries(a.flavor_, std::move(c));
  }

  // Reciprocal, defined when the constant term is 1.
  PowerSeries invert() const {
    if (term(0) != QPoly(1))
      throw std::invalid_argument("can only invert a series with constant term 1");
    std::vector<QPoly> g(c_.size());
    g[0] = QPoly(1);
    for (int n = 1; n <= order(); ++n) {
      QPoly acc;
      for (int k = 1; k <= n; ++k) acc += term(k) * g[static_cast<std::size_t>(n - k)];
      g[static_cast<std::size_t>(n)] = -acc;
    }
    return PowerSeries(flavor_, std::move(g));
  }

  PowerSeries derivative() const {
    if (order() == 0) return PowerSeries(flavor_, {QPoly()});
    std::vector<QPoly> d(c_.size() - 1);
    for (int n = 1; n <= order(); ++n)
      d[static_cast<std::size_t>(n - 1)] = term(n) * QPoly(Rat(n));
    return PowerSeries(flavor_, std::move(d));
  }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.flavor_ == b.flavor_ && a.c_ == b.c_;
  }

 private:
  static void require_same(const PowerSeries& a, const PowerSeries& b) {
    if (a.flavor_ != b.flavor_)
      throw std::invalid_argument("mixed ordinary/exponential series arithmetic");
  }
  static PowerSeries combine(const PowerSeries& a, const PowerSeries& b, int sg) {
    require_same(a, b);
    const int ord = std::min(a.order(), b.order());
    std::vector<QPoly> c(static_cast<std::size_t>(ord) + 1);
    for (int n = 0; n <= ord; ++n) c[n] = a.term(n) + QPoly(Rat(sg)) * b.term(n);
    return PowerSeries(a.flavor_, std::move(c));
  }

  Flavor flavor_;
  std::vector<QPoly> c_;
};

namespace detail {

inline PowerSeries exp_at(Flavor f, const Rat& u, int order) {
  std::vector<QPoly> c(static_cast<std::size_t>(order) + 1);
  Rat pw = 1;
  for (int n = 0; n <= order; ++n) {
    c[static_cast<std::size_t>(n)] = QPoly(pw / factorial_rat(n));
    pw *= u;
  }
  return PowerSeries(f, std::move(c));
}

inline PowerSeries one_minus(Flavor f, const QPoly& u, int order) {
  std::vector<QPoly> c(static_cast<std::size_t>(order) + 1);
  c[0] = QPoly(1);
  if (order >= 1) c[1] = -u;
  return PowerSeries(f, std::move(c));
}

}  // namespace detail

// exp(-t)/(1-t): derangement counts under count()
inline PowerSeries egf_derangements(int order) {
  return detail::exp_at(Flavor::egf, Rat(-1), order) *
         detail::one_minus(Flavor::egf, QPoly(Rat(1)), order).invert();
}

// exp(-t)/(1-t)^2: counts the slices with last letter 1, offset by two
inline PowerSeries egf_dn1(int order) {
  const PowerSeries inv = detail::one_minus(Flavor::egf, QPoly(Rat(1)), order).invert();
  return detail::exp_at(Flavor::egf, Rat(-1), order) * inv * inv;
}

// (1 + 2t - t^2)/(1-t)^3: the near-diagonal slice counts
inline PowerSeries ogf_dsub2(int order) {
  std::vector<QPoly> num(static_cast<std::size_t>(order) + 1);
  num[0] = QPoly(1);
  if (order >= 1) num[1] = QPoly(Rat(2));
  if (order >= 2) num[2] = QPoly(Rat(-1));
  const PowerSeries inv = detail::one_minus(Flavor::ogf, QPoly(Rat(1)), order).invert();
  return PowerSeries(Flavor::ogf, std::move(num)) * inv * inv * inv;
}

// (1-(x+y)t)/((1-xt)(1-yt)): the cycle-signed specialization collapses to
// a rational function, expanded here with polynomial coefficients
inline PowerSeries ogf_lambda_minus1(int order) {
  const QPoly px = to_rational(Poly(Var::x()));
  const QPoly py = to_rational(Poly(Var::y()));
  std::vector<QPoly> num(static_cast<std::size_t>(order) + 1);
  num[0] = QPoly(1);
  if (order >= 1) num[1] = -(px + py);
  return PowerSeries(Flavor::ogf, std::move(num)) *
         (detail::one_minus(Flavor::ogf, px, order) *
          detail::one_minus(Flavor::ogf, py, order)).invert();
}

// ---------------------------------------------------------------------------
// J-fractions

// 1/(1 - gamma_0 t - beta_1 t^2/(1 - gamma_1 t - beta_2 t^2/(...)))
struct JFractionSpec {
  std::string name;
  std::function<Poly(int)> gamma;  // level-step weight at height h, h >= 0
  std::function<Poly(int)> beta;   // down-step weight from height h, h >= 1
};

// Moments of the three-variable derangement sum
inline JFractionSpec jf_full() {
  return {"full",
          [](int h) { return h == 0 ? Poly() : Poly(Var::x()) + h * Poly(Var::y()) + (h - 1); },
          [](int h) {
            return (Poly(Var::lam()) + (h - 1)) * (Poly(Var::x()) + (h - 1)) * Poly(Var::y());
          }};
}

// One-variable slice: moments are the minima-counting derangement polynomials
inline JFractionSpec jf_dnx(Var v = Var::x()) {
  return {"dnx", [v](int h) { return h == 0 ? Poly() : Poly(v) + (2 * h - 1); },
          [v](int h) { return h * (Poly(v) + (h - 1)); }};
}

// Pure numbers: moments count the last-letter-1 slices two sizes up
inline JFractionSpec jf_dn1() {
  return {"dn1", [](int h) { return Poly(2 * h + 1); },
          [](int h) { return Poly(h * (h + 1)); }};
}

// Motzkin-path transfer: A_{k+1}(h) = A_k(h-1) + A_k(h) gamma_h + A_k(h+1) beta_{h+1}
inline std::vector<Poly> jf_moments(const JFractionSpec& jf, int order) {
  std::vector<Poly> mu;
  mu.reserve(static_cast<std::size_t>(order) + 1);
  std::vector<Poly> a(static_cast<std::size_t>(order) / 2 + 2);
  a[0] = Poly(1);
  mu.push_back(a[0]);
  for (int k = 1; k <= order; ++k) {
    std::vector<Poly> nxt(a.size());
    for (std::size_t h = 0; h < a.size(); ++h) {
      Poly acc = a[h] * jf.gamma(static_cast<int>(h));
      if (h > 0) acc += a[h - 1];
      if (h + 1 < a.size()) acc += a[h + 1] * jf.beta(static_cast<int>(h) + 1);
      nxt[h] = std::move(acc);
    }
    a = std::move(nxt);
    mu.push_back(a[0]);
  }
  return mu;
}

// ---------------------------------------------------------------------------
// Checks tying the fractions back to brute-force enumeration

struct MomentCase {
  int n = 0;
  Poly from_cf, from_enum;
  bool pass = false;
};

// Moments of the full fraction against the lambda/x/y sum over derangements
inline std::vector<MomentCase> verify_jfraction_theorem(int max_n) {
  const auto mu = jf_moments(jf_full(), max_n);
  std::vector<MomentCase> out;
  for (int n = 0; n <= max_n; ++n) {
    MomentCase c;
    c.n = n;
    c.from_cf = mu[static_cast<std::size_t>(n)];
    c.from_enum = weighted_sum({FamilyKind::Dn, n, 0}, WeightSpec::lambda_x_y);
    c.pass = c.from_cf == c.from_enum;
    out.push_back(std::move(c));
  }
  return out;
}

// At lambda = -1 the sum telescopes to a two-variable rational series
inline std::vector<MomentCase> verify_lambda_minus1(int max_n) {
  const PowerSeries gf = ogf_lambda_minus1(max_n);
  std::vector<MomentCase> out;
  for (int n = 0; n <= max_n; ++n) {
    MomentCase c;
    c.n = n;
    c.from_cf = to_integer(gf.term(n));
    const Poly brute = weighted_sum({FamilyKind::Dn, n, 0}, WeightSpec::lambda_x_y);
    c.from_enum = brute.subst({{Var::lam(), Poly(-1)}});
    Poly closed;
    if (n == 0) closed = Poly(1);
    for (int j = 1; j <= n - 1; ++j)
      closed -= Poly(Monomial{{Var::x(), j}, {Var::y(), n - j}});
    c.pass = c.from_cf == c.from_enum && c.from_enum == closed;
    out.push_back(std::move(c));
  }
  return out;
}

inline bool all_pass(const std::vector<MomentCase>& cases) {
  for (const auto& c : cases)
    if (!c.pass) return false;
  return true;
}

}  // namespace derange
