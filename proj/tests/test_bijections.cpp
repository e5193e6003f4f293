#include <map>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "derange/bijections.hpp"
#include "derange/families.hpp"
#include "derange/multipoly.hpp"
#include "derange/permutation.hpp"
#include "derange/signed_permutation.hpp"

using namespace derange;

TEST_CASE("first unexcited position") {
  REQUIRE(i_sigma(Permutation::parse("24153")) == 2);
  REQUIRE(i_sigma(Permutation::parse("21453")) == 2);
  REQUIRE(i_sigma(Permutation::parse("3142")) == 1);
  REQUIRE(i_sigma(Permutation::parse("23541")) == 3);
  REQUIRE_THROWS_AS(i_sigma(Permutation::parse("23451")), std::invalid_argument);
}

TEST_CASE("involution pairs on a worked slice") {
  // E_{5,3} splits into four orbits
  const std::map<std::string, std::string> orbit = {
      {"24153", "21453"}, {"25413", "24513"}, {"45123", "54123"}, {"54213", "45213"}};
  for (const auto& [a, b] : orbit) {
    const Permutation s = Permutation::parse(a);
    const Permutation t = Permutation::parse(b);
    REQUIRE(wpsr_phi(s) == t);
    REQUIRE(wpsr_phi(t) == s);
    REQUIRE(weight_of(s, WeightSpec::sign_cyc_rlmv_excv) ==
            -weight_of(t, WeightSpec::sign_cyc_rlmv_excv));
  }
}

TEST_CASE("reduction drops the letter 1 and shifts") {
  REQUIRE(psi_reduce(Permutation::parse("3142")) == Permutation::parse("231"));
  REQUIRE(psi_reduce(Permutation::parse("51423")) == Permutation::parse("4312"));
  REQUIRE(psi_reduce(Permutation::parse("41523")) == Permutation::parse("3412"));
  REQUIRE(psi_reduce(Permutation::parse("41253")) == Permutation::parse("3142"));
  // too short, letter 1 misplaced, excluded 2-cycle start
  REQUIRE_THROWS_AS(psi_reduce(Permutation::parse("21")), std::invalid_argument);
  REQUIRE_THROWS_AS(psi_reduce(Permutation::parse("231")), std::invalid_argument);
  REQUIRE_THROWS_AS(psi_reduce(Permutation::parse("2143")), std::invalid_argument);
}

TEST_CASE("reduction weight law on a worked instance") {
  const Permutation s = Permutation::parse("3142");
  REQUIRE(weight_of(s, WeightSpec::sign_cyc_rlmv_excv) ==
          Poly::parse("-x1*x2*y3*y4"));
  const Permutation red = psi_reduce(s);
  REQUIRE(weight_of(red, WeightSpec::sign_cyc_rlmv_excv) == Poly::parse("-x1*y2*y3"));
  REQUIRE(weight_of(s, WeightSpec::sign_cyc_rlmv_excv) ==
          Poly(Var::x(1)) *
              weight_of(red, WeightSpec::sign_cyc_rlmv_excv).subst(shift_vars_up(4)));
}

TEST_CASE("slice reports across the full range") {
  const SliceReport spot = check_slice_bijections(5, 3);
  REQUIRE(spot.e_size == 8);
  REQUIRE(spot.u_size == 3);
  REQUIRE(spot.pass());
  for (int n = 2; n <= 7; ++n)
    for (int j = 1; j <= n - 1; ++j) {
      const SliceReport r = check_slice_bijections(n, j);
      INFO("n=" << n << " j=" << j);
      REQUIRE(r.phi_ok);
      REQUIRE(r.psi_ok);
      REQUIRE(r.flip_ok);
      REQUIRE(r.e_size % 2 == 0);
    }
}

TEST_CASE("mixed-sign matching base case") {
  const auto pairs = typeb_matching_pairs(2);
  REQUIRE(pairs.size() == 2);
  REQUIRE(pairs[0].first == SignedPermutation::parse("-1,2"));
  REQUIRE(pairs[0].second == SignedPermutation::parse("2,-1"));
  REQUIRE(pairs[1].first == SignedPermutation::parse("1,-2"));
  REQUIRE(pairs[1].second == SignedPermutation::parse("-2,1"));
}

TEST_CASE("mixed-sign matching up the induction") {
  for (int n = 2; n <= 5; ++n) {
    const MatchReport r = typeb_matching(n);
    INFO(r.label);
    std::size_t full = 1, half = 1;
    for (int i = 1; i <= n; ++i) {
      full *= 2 * static_cast<std::size_t>(i);
      half *= static_cast<std::size_t>(i);
    }
    REQUIRE(r.domain_size == full - 2 * half);
    REQUIRE(r.pairs.size() * 2 == r.domain_size);
    REQUIRE(r.fixed_points == 0);
    REQUIRE(r.covers);
    REQUIRE(r.weight_cancels);
    REQUIRE(r.images_match);
    REQUIRE(r.pass());
  }
}

TEST_CASE("type-B minima recursion") {
  for (int n = 2; n <= 5; ++n) {
    const TypeBRecursionReport r = check_typeb_recursion(n);
    INFO("n=" << n);
    REQUIRE(r.phi1_bijective);
    REQUIRE(r.phi1_weights);
    REQUIRE(r.cnk_ok);
    REQUIRE(r.phi2_bijective);
    REQUIRE(r.phi2_weights);
    REQUIRE(r.dprime_sum_ok);
    REQUIRE(r.recurrence_ok);
  }
  // n=2 factor spelled out against the frozen one-letter sum
  const Poly q1 = weighted_sum({FamilyKind::Bn, 1, 0}, WeightSpec::typeb_rlm);
  REQUIRE(q1 == Poly::parse("-y1 - s*t"));
  const Poly q2 = weighted_sum({FamilyKind::Bn, 2, 0}, WeightSpec::typeb_rlm);
  REQUIRE(q2 == -(Poly(Var::y(2)) - 1) * q1);
}
