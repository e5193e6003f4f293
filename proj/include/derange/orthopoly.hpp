// Monic three-term recurrences, the modified-start construction, and the
// moment functional whose moments are the minima polynomials.  Everything
// lives in exact integer or rational arithmetic; X is the polynomial
// indeterminate, a the statistic marker.

#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "derange/families.hpp"
#include "derange/multipoly.hpp"
#include "derange/numbers.hpp"
#include "derange/series.hpp"

namespace derange {

// P_{n+1} = (X - b_n) P_n - lam_n P_{n-1}, with the two seeds free so a
// modified-start family fits the same shape.
struct ThreeTermSeq {
  std::function<Poly(int)> b, lam;
  Poly p0, p1;
};

inline std::vector<Poly> generate(const ThreeTermSeq& seq, int n_max) {
  std::vector<Poly> p;
  p.reserve(static_cast<std::size_t>(n_max) + 1);
  p.push_back(seq.p0);
  if (n_max >= 1) p.push_back(seq.p1);
  for (int n = 1; n < n_max; ++n)
    p.push_back((Poly(Var::X()) - seq.b(n)) * p[static_cast<std::size_t>(n)] -
                seq.lam(n) * p[static_cast<std::size_t>(n) - 1]);
  return p;
}

inline ThreeTermSeq laguerre_seq(const Poly& alpha) {
  return {[alpha](int k) { return alpha + (2 * k + 1); },
          [alpha](int k) { return k * (alpha + k); }, Poly(1),
          Poly(Var::X()) - alpha - 1};
}

// Same family with both coefficient streams advanced by c.
inline ThreeTermSeq assoc_laguerre_seq(const Poly& alpha, const Poly& c) {
  return {[alpha, c](int k) { return alpha + 2 * c + (2 * k + 1); },
          [alpha, c](int k) { return (c + k) * (alpha + c + k); }, Poly(1),
          Poly(Var::X()) - alpha - 2 * c - 1};
}

// Coefficient streams shifted one step: the numerator family of the sequence.
inline ThreeTermSeq shifted(const ThreeTermSeq& seq) {
  return {[seq](int k) { return seq.b(k + 1); }, [seq](int k) { return seq.lam(k + 1); },
          Poly(1), Poly(Var::X()) - seq.b(1)};
}

// Modified-start family: same recurrence, first polynomial lowered by c.
// Satisfies star_n = P_n - c Q_{n-1} with Q from the shifted streams.
inline ThreeTermSeq chihara_star(const ThreeTermSeq& seq, const Poly& c) {
  return {seq.b, seq.lam, seq.p0, seq.p1 - c};
}

// The displayed family: recurrence route
inline std::vector<Poly> corecursive_P(int n_max) {
  const Poly a(Var::a());
  return generate({[a](int k) { return a + (2 * k - 1); },
                   [a](int k) { return k * (a + k - 1); }, Poly(1), Poly(Var::X())},
                  n_max);
}

// Same family assembled from shifted-argument pieces
inline std::vector<Poly> corecursive_P_via_laguerre(int n_max) {
  const Poly a(Var::a());
  const std::map<Var, Poly> shift_arg = {{Var::X(), Poly(Var::X()) + 1}};
  const auto lag = generate(laguerre_seq(a - 1), n_max);
  const auto assoc = generate(assoc_laguerre_seq(a - 1, Poly(1)), n_max);
  std::vector<Poly> p{Poly(1)};
  for (int n = 1; n <= n_max; ++n)
    p.push_back(lag[static_cast<std::size_t>(n)].subst(shift_arg) +
                (a - 1) * assoc[static_cast<std::size_t>(n) - 1].subst(shift_arg));
  return p;
}

// ---------------------------------------------------------------------------
// The moment functional

struct MomentFunctional {
  std::vector<Poly> mu;

  static MomentFunctional from_fraction(int order) {
    return {jf_moments(jf_dnx(Var::a()), order)};
  }

  // Histogram route: mu_n = sum over the minima table row
  static MomentFunctional from_enumeration(int order) {
    MomentFunctional f;
    f.mu.push_back(Poly(1));
    if (order >= 1) f.mu.push_back(Poly());
    for (int n = 2; n <= order; ++n) {
      const auto row = rlm_row_enum(n);
      Poly m;
      for (std::size_t k = 0; k < row.size(); ++k)
        m.add_term(Monomial::power(Var::a(), static_cast<int>(k) + 1), row[k]);
      f.mu.push_back(std::move(m));
    }
    return f;
  }

  // Linear in X; coefficients may carry the marker variable through.
  Poly apply(const Poly& p) const {
    Poly out;
    for (const auto& [k, c] : p.coefficients_in(Var::X())) {
      if (k < 0 || static_cast<std::size_t>(k) >= mu.size())
        throw std::out_of_range("functional needs more moments");
      out += c * mu[static_cast<std::size_t>(k)];
    }
    return out;
  }
};

struct OrthogonalityReport {
  int n_max = 0;
  bool moments_agree = false;  // fraction vs histogram through order 9
  bool zeros_ok = false;       // L[X^k P_n] = 0 for k < n
  bool norms_ok = false;       // L[X^n P_n] = prod_k k (a + k - 1)
  bool pass() const { return moments_agree && zeros_ok && norms_ok; }
};

inline OrthogonalityReport orthogonality_check(int n_max) {
  OrthogonalityReport r;
  r.n_max = n_max;
  const int order = 2 * n_max;  // the norm row reaches degree 2 n_max
  const MomentFunctional L = MomentFunctional::from_fraction(order);

  const int enum_order = std::min(order, 9);
  const MomentFunctional E = MomentFunctional::from_enumeration(enum_order);
  r.moments_agree = true;
  for (int n = 0; n <= enum_order; ++n)
    r.moments_agree =
        r.moments_agree && L.mu[static_cast<std::size_t>(n)] == E.mu[static_cast<std::size_t>(n)];

  const auto p = corecursive_P(n_max);
  r.zeros_ok = true;
  r.norms_ok = true;
  const Poly a(Var::a());
  for (int n = 1; n <= n_max; ++n) {
    Poly xk(1);
    for (int k = 0; k < n; ++k) {
      r.zeros_ok = r.zeros_ok && L.apply(xk * p[static_cast<std::size_t>(n)]).is_zero();
      xk *= Poly(Var::X());
    }
    Poly norm(1);
    for (int k = 1; k <= n; ++k) norm *= k * (a + (k - 1));
    r.norms_ok = r.norms_ok && L.apply(xk * p[static_cast<std::size_t>(n)]) == norm;
  }
  return r;
}

// det [mu_{i+j}] for i, j = 0..m by rational elimination
inline Rat hankel_det(const std::vector<Rat>& mu, int m) {
  const std::size_t dim = static_cast<std::size_t>(m) + 1;
  if (mu.size() < 2 * dim - 1) throw std::invalid_argument("not enough moments");
  std::vector<std::vector<Rat>> h(dim, std::vector<Rat>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) h[i][j] = mu[i + j];
  Rat det = 1;
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t piv = col;
    while (piv < dim && h[piv][col] == 0) ++piv;
    if (piv == dim) return Rat(0);
    if (piv != col) {
      std::swap(h[piv], h[col]);
      det = -det;
    }
    det *= h[col][col];
    for (std::size_t row = col + 1; row < dim; ++row) {
      const Rat f = h[row][col] / h[col][col];
      for (std::size_t j = col; j < dim; ++j) h[row][j] -= f * h[col][j];
    }
  }
  return det;
}

}  // namespace derange
