// The catalog of signed-enumeration identities.  Each entry pins a family,
// a weight, and a closed-form right-hand side; verify_* recomputes the left
// side by exhaustive summation and compares exactly.
//
//   KZ03           sum over Dnj of (-1)^cyc x^exc                = -x^(n-j)
//   CYC-EXC        sum over Dn  of (-1)^cyc x^exc                = -(x+...+x^(n-1))
//   INV-EXC        sum over Dn  of (-1)^inv x^exc                = (-1)^(n-1)(x+...+x^(n-1))
//   PZ1            sum over Dnj of (-1)^cyc RLMv/EXCv weight     = -x1..xj y_{j+1}..y_n
//   PZ2            sum over Dnj_tilde, RLMi/EXCi weight          = -y1..y_{n-j} x_{n+1-j}..x_n
//   AG1, AG2       the same weights summed over all of Dn
//   AG1-INV/2-INV  (-1)^inv variants, sign (-1)^(n-1)
//   CONJ1          sum over Dnj_bar of (-1)^cyc prod_{EXCi} x_i  = -x1..xj
//   SPEC-L-1       lambda -> -1 in the univariate generating sum
//   SN-EXC-A       sum over Sn of (-1)^cyc prod_{EXCi} x_i       = -prod_{j<n}(x_j-1)
//   ZHAO           type-B excedance sum at s=t=1, all x_i = x
//   BN-EXC         full type-B excedance sum over Bn
//   BPLUS/BMINUS/BMIXED   the same sum split by sign class
//   RLMV-A-SIGNED  sum over Sn of (-1)^cyc prod_{RLMv} y_v
//   BW-Q           sum over Sn of q^inv prod_{RLMv} y_v
//   QBN-RLM        type-B right-to-left-minimum sum over Bn

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "derange/families.hpp"
#include "derange/multipoly.hpp"

namespace derange {

struct IdentitySpec {
  std::string id;
  bool type_b = false;
  bool sliced = false;  // ranges over j as well as n
  int min_n = 2;
};

inline const std::vector<IdentitySpec>& identity_catalog() {
  static const std::vector<IdentitySpec> catalog = {
      {"KZ03", false, true, 2},      {"CYC-EXC", false, false, 2},
      {"INV-EXC", false, false, 2},  {"PZ1", false, true, 2},
      {"PZ2", false, true, 2},       {"AG1", false, false, 2},
      {"AG2", false, false, 2},      {"AG1-INV", false, false, 2},
      {"AG2-INV", false, false, 2},  {"CONJ1", false, true, 2},
      {"SPEC-L-1", false, false, 2}, {"SN-EXC-A", false, false, 1},
      {"ZHAO", true, false, 1},      {"BPLUS", true, false, 1},
      {"BMINUS", true, false, 1},    {"BMIXED", true, false, 2},
      {"BN-EXC", true, false, 1},    {"RLMV-A-SIGNED", false, false, 1},
      {"BW-Q", false, false, 1},     {"QBN-RLM", true, false, 1},
  };
  return catalog;
}

// ASCII id, accepting the typeset name of the lambda specialization too.
inline std::string normalize_identity_id(const std::string& id) {
  if (id == "SPEC-λ−1" || id == "SPEC-λ-1") return "SPEC-L-1";
  return id;
}

inline const IdentitySpec& identity_spec(const std::string& raw) {
  const std::string id = normalize_identity_id(raw);
  for (const auto& s : identity_catalog())
    if (s.id == id) return s;
  throw std::invalid_argument("unknown identity id: " + raw);
}

namespace detail {

inline Poly prod_x(int from, int to) {
  Monomial m;
  for (int i = from; i <= to; ++i) m *= Monomial::power(Var::x(i), 1);
  return Poly(m);
}

inline Poly prod_y(int from, int to) {
  Monomial m;
  for (int i = from; i <= to; ++i) m *= Monomial::power(Var::y(i), 1);
  return Poly(m);
}

// x + x^2 + ... + x^(n-1)
inline Poly geometric_x(int n) {
  Poly out;
  for (int k = 1; k <= n - 1; ++k) out += Poly(Monomial::power(Var::x(), k));
  return out;
}

inline Poly product_xj_minus_one(int upto) {
  Poly out(1);
  for (int j = 1; j <= upto; ++j) out *= Poly(Var::x(j)) - 1;
  return out;
}

}  // namespace detail

inline Poly identity_lhs(const std::string& id, int n, int j) {
  if (id == "KZ03") return weighted_sum({FamilyKind::Dnj, n, j}, WeightSpec::sign_cyc_exc_x);
  if (id == "CYC-EXC") return weighted_sum({FamilyKind::Dn, n, 0}, WeightSpec::sign_cyc_exc_x);
  if (id == "INV-EXC") return weighted_sum({FamilyKind::Dn, n, 0}, WeightSpec::inv_exc_x);
  if (id == "PZ1") return weighted_sum({FamilyKind::Dnj, n, j}, WeightSpec::sign_cyc_rlmv_excv);
  if (id == "PZ2")
    return weighted_sum({FamilyKind::Dnj_tilde, n, j}, WeightSpec::sign_cyc_rlmi_exci);
  if (id == "AG1") return weighted_sum({FamilyKind::Dn, n, 0}, WeightSpec::sign_cyc_rlmv_excv);
  if (id == "AG2") return weighted_sum({FamilyKind::Dn, n, 0}, WeightSpec::sign_cyc_rlmi_exci);
  if (id == "AG1-INV") return weighted_sum({FamilyKind::Dn, n, 0}, WeightSpec::inv_rlmv_excv);
  if (id == "AG2-INV") return weighted_sum({FamilyKind::Dn, n, 0}, WeightSpec::inv_rlmi_exci);
  if (id == "CONJ1")
    return weighted_sum({FamilyKind::Dnj_bar, n, j}, WeightSpec::sign_cyc_exci_vars);
  if (id == "SPEC-L-1")
    return weighted_sum({FamilyKind::Dn, n, 0}, WeightSpec::lambda_x_y)
        .subst({{Var::lam(), Poly(-1)}});
  if (id == "SN-EXC-A") return weighted_sum({FamilyKind::Sn, n, 0}, WeightSpec::sign_cyc_exci_vars);
  if (id == "ZHAO") {
    std::map<Var, Poly> bind = {{Var::s(), Poly(1)}, {Var::t(), Poly(1)}};
    for (int i = 1; i <= n; ++i) bind[Var::x(i)] = Poly(Var::x());
    return weighted_sum({FamilyKind::Bn, n, 0}, WeightSpec::typeb_exc).subst(bind);
  }
  if (id == "BN-EXC") return weighted_sum({FamilyKind::Bn, n, 0}, WeightSpec::typeb_exc);
  if (id == "BPLUS") return weighted_sum({FamilyKind::Bn_plus, n, 0}, WeightSpec::typeb_exc);
  if (id == "BMINUS") return weighted_sum({FamilyKind::Bn_minus, n, 0}, WeightSpec::typeb_exc);
  if (id == "BMIXED") return weighted_sum({FamilyKind::Bn_mixed, n, 0}, WeightSpec::typeb_exc);
  if (id == "RLMV-A-SIGNED")
    return weighted_sum({FamilyKind::Sn, n, 0}, WeightSpec::sign_cyc_rlmv_y);
  if (id == "BW-Q") return weighted_sum({FamilyKind::Sn, n, 0}, WeightSpec::qinv_rlmv_y);
  if (id == "QBN-RLM") return weighted_sum({FamilyKind::Bn, n, 0}, WeightSpec::typeb_rlm);
  throw std::invalid_argument("unknown identity id: " + id);
}

inline Poly identity_rhs(const std::string& id, int n, int j) {
  using namespace detail;
  const Int parity_n = (n % 2 == 0) ? 1 : -1;          // (-1)^n
  const Int parity_n1 = (n % 2 == 1) ? 1 : -1;         // (-1)^(n-1)
  if (id == "KZ03") return -Poly(Monomial::power(Var::x(), n - j));
  if (id == "CYC-EXC") return -geometric_x(n);
  if (id == "INV-EXC") return Poly(parity_n1) * geometric_x(n);
  if (id == "PZ1") return -(prod_x(1, j) * prod_y(j + 1, n));
  if (id == "PZ2") return -(prod_y(1, n - j) * prod_x(n + 1 - j, n));
  if (id == "AG1") {
    Poly out;
    for (int k = 1; k <= n - 1; ++k) out += prod_x(1, k) * prod_y(k + 1, n);
    return -out;
  }
  if (id == "AG2") {
    Poly out;
    for (int k = 1; k <= n - 1; ++k) out += prod_y(1, k) * prod_x(k + 1, n);
    return -out;
  }
  if (id == "AG1-INV") return Poly(parity_n) * identity_rhs("AG1", n, 0);
  if (id == "AG2-INV") return Poly(parity_n) * identity_rhs("AG2", n, 0);
  if (id == "CONJ1") return -prod_x(1, j);
  if (id == "SPEC-L-1") {
    Poly out;
    for (int k = 1; k <= n - 1; ++k)
      out += Poly(Monomial{{Var::x(), k}, {Var::y(), n - k}});
    return -out;
  }
  if (id == "SN-EXC-A") return -product_xj_minus_one(n - 1);
  if (id == "ZHAO") {
    const Poly x(Var::x());
    if (n % 2 == 1) return -((x + 1) * (x - 1).pow(n - 1));
    return (x - 1).pow(n);
  }
  if (id == "BN-EXC") {
    const Poly tail(Monomial{{Var::x(n), 1}, {Var::s(), n}, {Var::t(), n * (n + 1) / 2}});
    return -((Poly(1) + Poly(parity_n1) * tail) * product_xj_minus_one(n - 1));
  }
  if (id == "BPLUS") return -product_xj_minus_one(n - 1);
  if (id == "BMINUS") {
    const Poly tail(Monomial{{Var::x(n), 1}, {Var::s(), n}, {Var::t(), n * (n + 1) / 2}});
    return Poly(parity_n) * tail * product_xj_minus_one(n - 1);
  }
  if (id == "BMIXED") return Poly();
  if (id == "RLMV-A-SIGNED") {
    Poly out(parity_n);
    for (int k = 1; k <= n; ++k)
      out *= (k % 2 == 1) ? Poly(Var::y(k)) : Poly(Var::y(k)) - 1;
    return out;
  }
  if (id == "BW-Q") {
    Poly out(1);
    for (int i = 1; i <= n; ++i) {
      Poly f(Var::y(i));
      for (int e = 1; e <= i - 1; ++e) f += Poly(Monomial::power(Var::q(), e));
      out *= f;
    }
    return out;
  }
  if (id == "QBN-RLM") {
    Poly out(parity_n);
    for (int i = 1; i <= n; ++i) {
      if (i % 2 == 0)
        out *= Poly(Var::y(i)) - 1;
      else
        out *= Poly(Var::y(i)) + Poly(Monomial{{Var::s(), 1}, {Var::t(), i}});
    }
    return out;
  }
  throw std::invalid_argument("unknown identity id: " + id);
}

struct IdentityCase {
  std::string id;
  int n = 0;
  std::optional<int> j;
  Poly lhs, rhs;
  bool pass = false;
};

inline IdentityCase verify_identity(const std::string& raw_id, int n, std::optional<int> j) {
  const std::string id = normalize_identity_id(raw_id);
  const IdentitySpec& spec = identity_spec(id);
  if (spec.sliced != j.has_value())
    throw std::invalid_argument(id + (spec.sliced ? " needs a slice index j"
                                                  : " does not take a slice index"));
  IdentityCase c;
  c.id = id;
  c.n = n;
  c.j = j;
  c.lhs = identity_lhs(id, n, j.value_or(0));
  c.rhs = identity_rhs(id, n, j.value_or(0));
  c.pass = c.lhs == c.rhs;
  return c;
}

// All valid (n, j) cases of one identity with n <= max_n.
inline std::vector<IdentityCase> verify_identity_range(const std::string& id, int max_n) {
  const IdentitySpec& spec = identity_spec(id);
  std::vector<IdentityCase> out;
  for (int n = spec.min_n; n <= max_n; ++n) {
    if (spec.sliced)
      for (int j = 1; j <= n - 1; ++j) out.push_back(verify_identity(id, n, j));
    else
      out.push_back(verify_identity(id, n, std::nullopt));
  }
  return out;
}

inline std::vector<IdentityCase> verify_all_identities(int max_n_a, int max_n_b) {
  std::vector<IdentityCase> out;
  for (const auto& spec : identity_catalog()) {
    auto part = verify_identity_range(spec.id, spec.type_b ? max_n_b : max_n_a);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace derange
