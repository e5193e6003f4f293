#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "derange/families.hpp"
#include "derange/signed_permutation.hpp"

using namespace derange;

TEST_CASE("window parsing and printing") {
  const SignedPermutation s = SignedPermutation::parse("-6,2,4,-3,1,5,8,-7");
  CHECK(s.size() == 8);
  CHECK(s(1) == -6);
  CHECK(s(8) == -7);
  CHECK(s.str() == "-6,2,4,-3,1,5,8,-7");
  CHECK(s.abs().str() == "62431587");
  CHECK(s.negate_all().str() == "6,-2,-4,3,-1,-5,-8,7");

  CHECK_THROWS_AS(SignedPermutation({1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPermutation({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPermutation({0, 1}), std::invalid_argument);
}

TEST_CASE("signed cycle decomposition") {
  const SignedPermutation s = SignedPermutation::parse("-6,2,4,-3,1,5,8,-7");
  CHECK(cycles_of(s).str() == "(1,-6,5)(2)(-3,4)(-7,8)");
  CHECK(type_b_statistics(s).cyc == 4);

  CHECK(cycles_of(SignedPermutation::parse("-1,2")).str() == "(-1)(2)");
  CHECK(cycles_of(SignedPermutation::parse("2,-1")).str() == "(-1,2)");
}

TEST_CASE("type-B statistics at small n") {
  const auto pos1 = type_b_statistics(SignedPermutation::parse("1"));
  CHECK(pos1.exc_b.empty());
  CHECK(pos1.anexc_b == std::vector<int>{1});
  CHECK(pos1.rlm_b == std::vector<int>{1});
  CHECK(pos1.neg == 0);
  CHECK(pos1.cyc == 1);

  const auto neg1 = type_b_statistics(SignedPermutation::parse("-1"));
  CHECK(neg1.exc_b == std::vector<int>{1});
  CHECK(neg1.anexc_b.empty());
  CHECK(neg1.rlm_b.empty());
  CHECK(neg1.neg == 1);
  CHECK(neg1.nsum == 1);
  CHECK(neg1.cyc == 1);

  const auto m = type_b_statistics(SignedPermutation::parse("-1,2"));
  CHECK(m.exc_b == std::vector<int>{1});
  CHECK(m.rlm_b == std::vector<int>{2});
  CHECK(m.neg == 1);
  CHECK(m.cyc == 2);
}

TEST_CASE("excedance and anti-excedance letters partition [n]") {
  FamilySpec b4{FamilyKind::Bn, 4, 0};
  for_each_signed(b4, [](const SignedPermutation& s) {
    const auto st = type_b_statistics(s);
    std::set<int> all(st.exc_b.begin(), st.exc_b.end());
    for (int j : st.anexc_b) CHECK(all.insert(j).second);
    CHECK(all.size() == 4);
  });
}

TEST_CASE("all-positive windows reduce to type-A right-to-left minima") {
  FamilySpec bp{FamilyKind::Bn_plus, 4, 0};
  for_each_signed(bp, [](const SignedPermutation& s) {
    const auto st = type_b_statistics(s);
    const auto plain = statistics(s.abs());
    CHECK(st.rlm_b == plain.rlm_v);
    CHECK(st.exc_b == plain.exc_i);  // type-B excedance letters = excedance positions
    CHECK(st.cyc == plain.cyc);
    CHECK(st.neg == 0);
  });
}

TEST_CASE("sign classes") {
  CHECK(SignedPermutation::parse("1,2").all_positive());
  CHECK(SignedPermutation::parse("-2,-1").all_negative());
  CHECK(SignedPermutation::parse("-1,2").mixed());
  CHECK(SignedPermutation().all_positive());
  CHECK_FALSE(SignedPermutation().all_negative());
}

TEST_CASE("inserting a letter of magnitude n") {
  const SignedPermutation tau = SignedPermutation::parse("-1,2");
  CHECK(insert(-3, 1, tau).str() == "-3,2,-1");
  CHECK(insert(-3, 2, tau).str() == "-1,-3,2");
  CHECK(insert(-3, 3, tau).str() == "-1,2,-3");
  CHECK(insert(3, 1, tau).str() == "3,2,-1");
  CHECK_THROWS_AS(insert(2, 1, tau), std::invalid_argument);
  CHECK_THROWS_AS(insert(-3, 4, tau), std::invalid_argument);

  // every window of B_n arises exactly once from (a, k, tau)
  for (int n = 1; n <= 4; ++n) {
    std::map<SignedPermutation, int> hits;
    FamilySpec prev{FamilyKind::Bn, n - 1, 0};
    for_each_signed(prev, [&](const SignedPermutation& t) {
      for (int a : {n, -n})
        for (int k = 1; k <= n; ++k) ++hits[insert(a, k, t)];
    });
    std::size_t total = 0;
    for (const auto& [w, c] : hits) {
      CHECK(c == 1);
      ++total;
    }
    std::size_t expect = 1;
    for (int i = 1; i <= n; ++i) expect *= 2 * i;
    CHECK(total == expect);
  }
}

TEST_CASE("signed transpositions swap window entries") {
  const SignedPermutation s = SignedPermutation::parse("2,-1");
  CHECK(apply_signed_transposition(2, -1, s).str() == "-1,2");
  const SignedPermutation t = SignedPermutation::parse("-3,2,1");
  CHECK(apply_signed_transposition(2, 1, t).str() == "-3,1,2");
  CHECK_THROWS_AS(apply_signed_transposition(1, -1, s), std::invalid_argument);
}
