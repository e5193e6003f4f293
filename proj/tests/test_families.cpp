#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "derange/families.hpp"

using namespace derange;

namespace {

std::set<std::string> words(const FamilySpec& f) {
  std::set<std::string> out;
  for_each(f, [&](const Permutation& p) { out.insert(p.str()); });
  return out;
}

std::size_t count_of(const FamilySpec& f) {
  std::size_t c = 0;
  if (is_type_b(f.kind))
    for_each_signed(f, [&](const SignedPermutation&) { ++c; });
  else
    for_each(f, [&](const Permutation&) { ++c; });
  return c;
}

}  // namespace

TEST_CASE("family name round trip") {
  for (const char* name : {"Sn", "Dn", "Dnj", "Dnj_tilde", "Dnj_bar", "Unj", "Enj", "Bn",
                           "Bn_plus", "Bn_minus", "Bn_mixed", "Bn_prime", "Bn_dprime", "Cnk",
                           "Bn_E"}) {
    auto k = family_from_name(name);
    REQUIRE(k.has_value());
    CHECK(family_name(*k) == name);
  }
  CHECK_FALSE(family_from_name("Zn").has_value());
}

TEST_CASE("cardinalities") {
  const long long derangements[] = {1, 0, 1, 2, 9, 44, 265, 1854, 14833};
  long long fact = 1;
  for (int n = 0; n <= 8; ++n) {
    if (n > 0) fact *= n;
    if (n <= 7) CHECK(count_of({FamilyKind::Sn, n, 0}) == static_cast<std::size_t>(fact));
    CHECK(count_of({FamilyKind::Dn, n, 0}) == static_cast<std::size_t>(derangements[n]));
  }
  for (int n = 2; n <= 7; ++n)
    for (int j = 1; j <= n - 1; ++j)
      CHECK(count_of({FamilyKind::Dnj, n, j}) ==
            static_cast<std::size_t>(derangements[n] / (n - 1)));

  long long bfact = 1;
  for (int n = 1; n <= 5; ++n) {
    bfact *= 2 * n;
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    CHECK(count_of({FamilyKind::Bn, n, 0}) == static_cast<std::size_t>(bfact));
    CHECK(count_of({FamilyKind::Bn_plus, n, 0}) == static_cast<std::size_t>(f));
    CHECK(count_of({FamilyKind::Bn_minus, n, 0}) == static_cast<std::size_t>(f));
    CHECK(count_of({FamilyKind::Bn_mixed, n, 0}) == static_cast<std::size_t>(bfact - 2 * f));
  }
}

TEST_CASE("lexicographic generation order") {
  const auto d3 = elements({FamilyKind::Dn, 3, 0});
  REQUIRE(d3.size() == 2);
  CHECK(d3[0].str() == "231");
  CHECK(d3[1].str() == "312");

  const auto s3 = elements({FamilyKind::Sn, 3, 0});
  CHECK(s3.front().str() == "123");
  CHECK(std::is_sorted(s3.begin(), s3.end()));

  const auto b2 = signed_elements({FamilyKind::Bn, 2, 0});
  REQUIRE(b2.size() == 8);
  CHECK(b2.front().str() == "-2,-1");
  CHECK(b2.back().str() == "2,1");
  CHECK(std::is_sorted(b2.begin(), b2.end()));
}

TEST_CASE("worked slice contents") {
  CHECK(words({FamilyKind::Dnj, 2, 1}) == std::set<std::string>{"21"});
  CHECK(words({FamilyKind::Unj, 4, 2}) == std::set<std::string>{"3142"});
  CHECK(words({FamilyKind::Enj, 4, 2}) == std::set<std::string>{"3412", "4312"});
  CHECK(words({FamilyKind::Unj, 5, 3}) == std::set<std::string>{"41253", "41523", "51423"});
  CHECK(words({FamilyKind::Enj, 5, 3}) ==
        std::set<std::string>{"21453", "24153", "24513", "25413", "45123", "45213", "54123",
                              "54213"});
  CHECK(words({FamilyKind::Unj, 5, 1}) == std::set<std::string>{"23451"});
}

TEST_CASE("slices partition the derangements") {
  for (int n = 2; n <= 6; ++n) {
    const auto whole = words({FamilyKind::Dn, n, 0});
    for (FamilyKind kind : {FamilyKind::Dnj, FamilyKind::Dnj_tilde, FamilyKind::Dnj_bar}) {
      std::set<std::string> seen;
      std::size_t total = 0;
      for (int j = 1; j <= n - 1; ++j) {
        const auto part = words({kind, n, j});
        total += part.size();
        seen.insert(part.begin(), part.end());
      }
      CHECK(seen == whole);
      CHECK(total == whole.size());
    }
  }
}

TEST_CASE("U and E slice the fixed-last-value derangements") {
  for (int n = 3; n <= 6; ++n)
    for (int j = 1; j <= n - 1; ++j) {
      const auto d = words({FamilyKind::Dnj, n, j});
      const auto u = words({FamilyKind::Unj, n, j});
      const auto e = words({FamilyKind::Enj, n, j});
      CHECK(u.size() + e.size() == d.size());
      for (const auto& w : u) CHECK(d.count(w) == 1);
      for (const auto& w : e) CHECK((d.count(w) == 1 && u.count(w) == 0));
    }
}

TEST_CASE("type-B position-of-n families partition") {
  for (int n = 3; n <= 5; ++n) {
    std::set<std::string> prime, dprime;
    for_each_signed({FamilyKind::Bn_prime, n, 0},
                    [&](const SignedPermutation& s) { prime.insert(s.str()); });
    for_each_signed({FamilyKind::Bn_dprime, n, 0},
                    [&](const SignedPermutation& s) { dprime.insert(s.str()); });
    CHECK(prime.size() + dprime.size() == count_of({FamilyKind::Bn, n, 0}));

    // the C-slices (plus the leftover block for even n) partition Bn_dprime
    std::set<std::string> covered;
    std::size_t total = 0;
    const int kmax = (n % 2 == 1) ? (n - 1) / 2 : (n - 2) / 2;
    for (int k = 1; k <= kmax; ++k) {
      for_each_signed({FamilyKind::Cnk, n, k}, [&](const SignedPermutation& s) {
        CHECK(covered.insert(s.str()).second);
        ++total;
      });
    }
    if (n % 2 == 0)
      for_each_signed({FamilyKind::Bn_E, n, 0}, [&](const SignedPermutation& s) {
        CHECK(covered.insert(s.str()).second);
        ++total;
      });
    CHECK(total == dprime.size());
    CHECK(covered == dprime);
  }
}

TEST_CASE("family validation") {
  CHECK_THROWS_AS(validate({FamilyKind::Dnj, 4, 4}), std::invalid_argument);
  CHECK_THROWS_AS(validate({FamilyKind::Dnj, 4, 0}), std::invalid_argument);
  CHECK_THROWS_AS(validate({FamilyKind::Enj, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(validate({FamilyKind::Cnk, 5, 3}), std::invalid_argument);
  CHECK_THROWS_AS(validate({FamilyKind::Bn_E, 5, 0}), std::invalid_argument);
  CHECK_NOTHROW(validate({FamilyKind::Cnk, 5, 2}));
  CHECK_NOTHROW(validate({FamilyKind::Bn_E, 4, 0}));
}

TEST_CASE("type-A weights at small size") {
  CHECK(weight_of(Permutation::parse("21"), WeightSpec::sign_cyc_rlmv_excv) ==
        Poly::parse("-x1*y2"));
  CHECK(weight_of(Permutation::parse("21"), WeightSpec::sign_cyc_rlmi_exci) ==
        Poly::parse("-x2*y1"));
  CHECK(weight_of(Permutation::parse("21"), WeightSpec::inv_rlmv_excv) == Poly::parse("-x1*y2"));
  CHECK(weight_of(Permutation::parse("231"), WeightSpec::lambda_x_y) ==
        Poly::parse("x*y^2*lambda"));
  CHECK(weight_of(Permutation::parse("21"), WeightSpec::sign_cyc_exc_x) == Poly::parse("-x"));
  CHECK(weight_of(Permutation::parse("321"), WeightSpec::sign_cyc_exci_vars) == Poly::parse("x1"));
  CHECK(weight_of(Permutation::parse("231"), WeightSpec::sign_cyc_exci_vars) ==
        Poly::parse("-x1*x2"));
  CHECK(weight_of(Permutation::parse("12"), WeightSpec::sign_cyc_rlmv_y) == Poly::parse("y1*y2"));
  CHECK(weight_of(Permutation::parse("21"), WeightSpec::qinv_rlmv_y) == Poly::parse("y1*q"));
  CHECK_THROWS_AS(weight_of(Permutation::parse("21"), WeightSpec::typeb_exc),
                  std::invalid_argument);
}

TEST_CASE("type-B weights at small size") {
  CHECK(weight_of(SignedPermutation::parse("-1,2"), WeightSpec::typeb_exc) ==
        Poly::parse("x1*s*t"));
  CHECK(weight_of(SignedPermutation::parse("2,-1"), WeightSpec::typeb_exc) ==
        Poly::parse("-x1*s*t"));
  CHECK(weight_of(SignedPermutation::parse("1,-2"), WeightSpec::typeb_exc) ==
        Poly::parse("x2*s*t^2"));
  CHECK(weight_of(SignedPermutation::parse("-2,1"), WeightSpec::typeb_exc) ==
        Poly::parse("-x2*s*t^2"));
  CHECK(weight_of(SignedPermutation::parse("-1,2,-3"), WeightSpec::typeb_exc) ==
        Poly::parse("-x1*x3*s^2*t^4"));
  CHECK(weight_of(SignedPermutation::parse("-1"), WeightSpec::typeb_rlm) == Poly::parse("-s*t"));
  CHECK(weight_of(SignedPermutation::parse("1"), WeightSpec::typeb_rlm) == Poly::parse("-y1"));
  CHECK_THROWS_AS(weight_of(SignedPermutation::parse("1"), WeightSpec::lambda_x_y),
                  std::invalid_argument);
}

TEST_CASE("weighted sums over small families") {
  CHECK(weighted_sum({FamilyKind::Dn, 0, 0}, WeightSpec::lambda_x_y) == Poly(1));
  CHECK(weighted_sum({FamilyKind::Dn, 1, 0}, WeightSpec::lambda_x_y).is_zero());
  CHECK(weighted_sum({FamilyKind::Dn, 2, 0}, WeightSpec::lambda_x_y) ==
        Poly::parse("x*y*lambda"));
  CHECK(weighted_sum({FamilyKind::Dn, 3, 0}, WeightSpec::lambda_x_y) ==
        Poly::parse("x^2*y*lambda + x*y^2*lambda"));
  CHECK(weighted_sum({FamilyKind::Dnj, 5, 3}, WeightSpec::sign_cyc_rlmv_excv) ==
        Poly::parse("-x1*x2*x3*y4*y5"));
  CHECK(weighted_sum({FamilyKind::Bn, 1, 0}, WeightSpec::typeb_rlm) == Poly::parse("-y1 - s*t"));
  CHECK(weighted_sum({FamilyKind::Bn, 2, 0}, WeightSpec::typeb_exc) ==
        Poly::parse("x1*x2*s^2*t^3 - x2*s^2*t^3 - x1 + 1"));
}
