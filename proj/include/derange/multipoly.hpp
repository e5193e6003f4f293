// Sparse multivariate polynomials with exact integer or rational coefficients.
//
// Variables come from a fixed set of families: the indexed weight variables
// x1,x2,... and y1,y2,... (index 0 stands for the plain univariate x resp. y),
// the scalars s, t, lambda, q, a, and a reserved indeterminate X used as the
// orthogonality variable.  Terms are kept in graded-lex order (total degree
// descending, then lexicographically by exponent vector), which makes the
// printed form canonical: "-x1*x2*y3 + x1".

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace derange {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class VarFamily : std::uint8_t { x, y, s, t, lambda, q, a, X };

struct Var {
  VarFamily family = VarFamily::x;
  int index = 0;  // only x and y carry an index; 0 means "no index"

  static Var x(int i = 0) { return {VarFamily::x, i}; }
  static Var y(int i = 0) { return {VarFamily::y, i}; }
  static Var s() { return {VarFamily::s, 0}; }
  static Var t() { return {VarFamily::t, 0}; }
  static Var lam() { return {VarFamily::lambda, 0}; }
  static Var q() { return {VarFamily::q, 0}; }
  static Var a() { return {VarFamily::a, 0}; }
  static Var X() { return {VarFamily::X, 0}; }

  auto operator<=>(const Var&) const = default;

  std::string name() const {
    std::string base;
    switch (family) {
      case VarFamily::x: base = "x"; break;
      case VarFamily::y: base = "y"; break;
      case VarFamily::s: base = "s"; break;
      case VarFamily::t: base = "t"; break;
      case VarFamily::lambda: base = "lambda"; break;
      case VarFamily::q: base = "q"; break;
      case VarFamily::a: base = "a"; break;
      case VarFamily::X: base = "X"; break;
    }
    if (index > 0) base += std::to_string(index);
    return base;
  }
};

inline void validate_var(const Var& v) {
  const bool indexed = v.family == VarFamily::x || v.family == VarFamily::y;
  if (v.index < 0 || (!indexed && v.index != 0))
    throw std::invalid_argument("invalid variable index");
}

// Product of variable powers; exponents positive, keys sorted by Var.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<std::pair<Var, int>> factors) {
    for (const auto& [v, e] : factors) *this *= Monomial::power(v, e);
  }

  static Monomial power(Var v, int e) {
    validate_var(v);
    if (e < 0) throw std::invalid_argument("negative exponent");
    Monomial m;
    if (e > 0) m.exps_.emplace_back(v, e);
    return m;
  }

  bool is_unit() const { return exps_.empty(); }
  int degree() const {
    int d = 0;
    for (const auto& [v, e] : exps_) d += e;
    return d;
  }
  int exponent(Var v) const {
    for (const auto& [w, e] : exps_)
      if (w == v) return e;
    return 0;
  }
  const std::vector<std::pair<Var, int>>& factors() const { return exps_; }

  Monomial& operator*=(const Monomial& o) {
    std::vector<std::pair<Var, int>> out;
    out.reserve(exps_.size() + o.exps_.size());
    auto i = exps_.begin();
    auto j = o.exps_.begin();
    while (i != exps_.end() || j != o.exps_.end()) {
      if (j == o.exps_.end() || (i != exps_.end() && i->first < j->first)) {
        out.push_back(*i++);
      } else if (i == exps_.end() || j->first < i->first) {
        out.push_back(*j++);
      } else {
        out.emplace_back(i->first, i->second + j->second);
        ++i, ++j;
      }
    }
    exps_ = std::move(out);
    return *this;
  }
  friend Monomial operator*(Monomial l, const Monomial& r) { return l *= r; }

  // Divides out v^e; caller guarantees the exponent is present.
  Monomial without(Var v) const {
    Monomial m;
    for (const auto& [w, e] : exps_)
      if (w != v) m.exps_.emplace_back(w, e);
    return m;
  }

  bool operator==(const Monomial&) const = default;

  std::string str() const {
    if (exps_.empty()) return "1";
    std::string out;
    for (const auto& [v, e] : exps_) {
      if (!out.empty()) out += '*';
      out += v.name();
      if (e > 1) out += '^' + std::to_string(e);
    }
    return out;
  }

 private:
  std::vector<std::pair<Var, int>> exps_;
};

// "a before b" in the canonical printed order: higher total degree first,
// ties broken lexicographically (earlier variable with the larger exponent
// wins).  Used as the term-map comparator so iteration is print order.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    auto i = a.factors().begin();
    auto j = b.factors().begin();
    while (i != a.factors().end() && j != b.factors().end()) {
      if (i->first != j->first) return i->first < j->first;
      if (i->second != j->second) return i->second > j->second;
      ++i, ++j;
    }
    return i != a.factors().end();
  }
};

namespace detail {

template <class C>
std::string coeff_str(const C& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

inline Int parse_integer(std::string_view s, std::size_t& p) {
  std::size_t start = p;
  while (p < s.size() && s[p] >= '0' && s[p] <= '9') ++p;
  if (p == start) throw std::invalid_argument("expected a number");
  return Int(std::string(s.substr(start, p - start)));
}

template <class C>
C parse_coeff(std::string_view s, std::size_t& p) {
  Int num = parse_integer(s, p);
  if (p < s.size() && s[p] == '/') {
    if constexpr (std::is_same_v<C, Rat>) {
      ++p;
      Int den = parse_integer(s, p);
      if (den == 0) throw std::invalid_argument("zero denominator");
      return Rat(num, den);
    } else {
      throw std::invalid_argument("rational coefficient in an integer polynomial");
    }
  }
  return C(num);
}

}  // namespace detail

template <class C>
class basic_poly {
 public:
  using coeff_type = C;
  using term_map = std::map<Monomial, C, MonomialOrder>;

  basic_poly() = default;
  basic_poly(int v) : basic_poly(C(v)) {}
  basic_poly(const C& v) {
    if (v != 0) terms_.emplace(Monomial{}, v);
  }
  explicit basic_poly(Var v) { terms_.emplace(Monomial::power(v, 1), C(1)); }
  explicit basic_poly(const Monomial& m, const C& c = C(1)) {
    if (c != 0) terms_.emplace(m, c);
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
  }
  int total_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }
  const term_map& terms() const { return terms_; }

  C coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C(0) : it->second;
  }
  C constant_term() const { return coeff(Monomial{}); }

  basic_poly& add_term(const Monomial& m, const C& c) {
    if (c == 0) return *this;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
    return *this;
  }

  basic_poly& operator+=(const basic_poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  basic_poly& operator-=(const basic_poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, C(-c));
    return *this;
  }
  basic_poly& operator*=(const basic_poly& o) {
    basic_poly out;
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
    terms_ = std::move(out.terms_);
    return *this;
  }

  friend basic_poly operator+(basic_poly l, const basic_poly& r) { return l += r; }
  friend basic_poly operator-(basic_poly l, const basic_poly& r) { return l -= r; }
  friend basic_poly operator*(basic_poly l, const basic_poly& r) { return l *= r; }
  friend basic_poly operator-(const basic_poly& p) {
    basic_poly out;
    for (const auto& [m, c] : p.terms_) out.terms_.emplace(m, C(-c));
    return out;
  }
  bool operator==(const basic_poly&) const = default;

  basic_poly pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    basic_poly out(1);
    for (int i = 0; i < k; ++i) out *= *this;
    return out;
  }

  // Replaces bound variables by polynomials; unbound variables stay themselves.
  basic_poly subst(const std::map<Var, basic_poly>& bind) const {
    basic_poly out;
    for (const auto& [m, c] : terms_) {
      basic_poly term(c);
      for (const auto& [v, e] : m.factors()) {
        auto it = bind.find(v);
        if (it == bind.end())
          term *= basic_poly(Monomial::power(v, e));
        else
          term *= it->second.pow(e);
      }
      out += term;
    }
    return out;
  }

  // Exponent -> coefficient polynomial, viewing *this as a polynomial in v.
  std::map<int, basic_poly> coefficients_in(Var v) const {
    std::map<int, basic_poly> out;
    for (const auto& [m, c] : terms_) out[m.exponent(v)].add_term(m.without(v), c);
    return out;
  }

  Rat eval(const std::map<Var, Rat>& point) const {
    Rat total = 0;
    for (const auto& [m, c] : terms_) {
      Rat term(c);
      for (const auto& [v, e] : m.factors()) {
        auto it = point.find(v);
        if (it == point.end())
          throw std::invalid_argument("unbound variable " + v.name() + " in eval");
        for (int i = 0; i < e; ++i) term *= it->second;
      }
      total += term;
    }
    return total;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      const bool neg = c < 0;
      const C mag = neg ? C(-c) : c;
      std::string body;
      if (m.is_unit())
        body = detail::coeff_str(mag);
      else if (mag == 1)
        body = m.str();
      else
        body = detail::coeff_str(mag) + "*" + m.str();
      if (out.empty())
        out = neg ? "-" + body : body;
      else
        out += (neg ? " - " : " + ") + body;
    }
    return out;
  }

  static basic_poly parse(std::string_view s) {
    std::size_t p = 0;
    auto skip = [&] {
      while (p < s.size() && (s[p] == ' ' || s[p] == '\t')) ++p;
    };
    auto parse_factor = [&]() -> basic_poly {
      if (p < s.size() && s[p] >= '0' && s[p] <= '9')
        return basic_poly(detail::parse_coeff<C>(s, p));
      Var v;
      if (s.substr(p, 6) == "lambda") {
        v = Var::lam();
        p += 6;
      } else if (p < s.size()) {
        switch (s[p]) {
          case 'x': v = Var::x(); break;
          case 'y': v = Var::y(); break;
          case 's': v = Var::s(); break;
          case 't': v = Var::t(); break;
          case 'q': v = Var::q(); break;
          case 'a': v = Var::a(); break;
          case 'X': v = Var::X(); break;
          default: throw std::invalid_argument("unknown variable at '" + std::string(s.substr(p)) + "'");
        }
        ++p;
        if ((v.family == VarFamily::x || v.family == VarFamily::y) && p < s.size() &&
            s[p] >= '0' && s[p] <= '9')
          v.index = static_cast<int>(detail::parse_integer(s, p));
      } else {
        throw std::invalid_argument("unexpected end of input");
      }
      int e = 1;
      if (p < s.size() && s[p] == '^') {
        ++p;
        e = static_cast<int>(detail::parse_integer(s, p));
      }
      return basic_poly(Monomial::power(v, e));
    };
    auto parse_term = [&]() -> basic_poly {
      basic_poly t = parse_factor();
      skip();
      while (p < s.size() && s[p] == '*') {
        ++p;
        skip();
        t *= parse_factor();
        skip();
      }
      return t;
    };

    basic_poly out;
    skip();
    int sign = 1;
    if (p < s.size() && (s[p] == '+' || s[p] == '-')) {
      if (s[p] == '-') sign = -1;
      ++p;
      skip();
    }
    while (true) {
      basic_poly t = parse_term();
      out += sign == 1 ? t : -t;
      skip();
      if (p >= s.size()) break;
      if (s[p] == '+')
        sign = 1;
      else if (s[p] == '-')
        sign = -1;
      else
        throw std::invalid_argument("expected '+' or '-' at '" + std::string(s.substr(p)) + "'");
      ++p;
      skip();
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const basic_poly& p) { return os << p.str(); }

 private:
  term_map terms_;
};

using Poly = basic_poly<Int>;
using QPoly = basic_poly<Rat>;

inline QPoly to_rational(const Poly& p) {
  QPoly out;
  for (const auto& [m, c] : p.terms()) out.add_term(m, Rat(c));
  return out;
}

// Exact inverse conversion; throws when a coefficient is not an integer.
inline Poly to_integer(const QPoly& p) {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    if (denominator(c) != 1) throw std::invalid_argument("non-integer coefficient");
    out.add_term(m, numerator(c));
  }
  return out;
}

}  // namespace derange
