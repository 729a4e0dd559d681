#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "stacksort/perm.hpp"
#include "stacksort/trees.hpp"
#include "test_oracles.hpp"

using namespace stacksort;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
}

TEST_CASE("construction and parsing") {
  CHECK(P("e").empty());
  CHECK(P("312") == Permutation({3, 1, 2}));
  CHECK(P("3 1 2") == Permutation({3, 1, 2}));
  CHECK(P("12 11 1 2") == Permutation({12, 11, 1, 2}));
  CHECK(P("10 2 3").str() == "10 2 3");
  CHECK(P("312").compact_str() == "312");
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(P("ab"), std::invalid_argument);
}

TEST_CASE("normalize") {
  CHECK(normalize(P("4 7 2")) == P("231"));
  CHECK(normalize(P("e")) == P("e"));
  CHECK(normalize(P("35412678")) == P("35412678"));
  CHECK(unnormalize(P("231"), {4, 7, 2}) == P("4 7 2"));
}

TEST_CASE("containment worked examples") {
  CHECK(contains(P("35412678"), P("321")));
  CHECK_FALSE(contains(P("123"), P("21")));
  CHECK(contains(P("2476153"), P("231")));
  CHECK(contains(P("2476153"), P("231")) == test_oracles::brute_contains(P("2476153"), P("231")));
  CHECK_THROWS_AS(contains(P("123"), P("4 7 2")), std::invalid_argument);
}

TEST_CASE("containment agrees with the subsequence oracle") {
  std::vector<Permutation> patterns;
  for (int k = 1; k <= 4; ++k)
    for (const Permutation& pat : all_permutations(k)) patterns.push_back(pat);
  for (int n = 0; n <= 6; ++n)
    for (const Permutation& p : all_permutations(n))
      for (const Permutation& pat : patterns)
        CHECK(contains(p, pat) == test_oracles::brute_contains(p, pat));
}

TEST_CASE("enumerate_av") {
  CHECK(enumerate_av(3, {P("231"), P("132")}).size() == 4);
  CHECK(enumerate_av(0, {P("21")}) == std::vector<Permutation>{P("e")});
  CHECK(enumerate_av(4, {}).size() == 24);
}

TEST_CASE("one-pattern classes of length three are counted by Catalan numbers") {
  for (int n = 0; n <= 8; ++n) {
    const std::size_t expected = static_cast<std::size_t>(catalan(n));
    for (const Permutation& tau : all_permutations(3))
      CHECK(enumerate_av(n, {tau}).size() == expected);
  }
}

TEST_CASE("direct and skew sums") {
  CHECK(skew_sum(P("12"), P("1")) == P("231"));
  CHECK(direct_sum(P("1"), P("1")) == P("12"));
  CHECK(direct_sum(P("e"), P("231")) == P("231"));
  CHECK(skew_sum(P("231"), P("e")) == P("231"));
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    auto rand_perm = [&](int max_n) {
      std::vector<int> e(static_cast<std::size_t>(rng() % static_cast<unsigned>(max_n + 1)));
      std::iota(e.begin(), e.end(), 1);
      std::shuffle(e.begin(), e.end(), rng);
      return Permutation(e);
    };
    Permutation a = rand_perm(6), b = rand_perm(6), c = rand_perm(6);
    CHECK(direct_sum(direct_sum(a, b), c) == direct_sum(a, direct_sum(b, c)));
    CHECK(skew_sum(skew_sum(a, b), c) == skew_sum(a, skew_sum(b, c)));
  }
}

TEST_CASE("rot") {
  CHECK(rot(P("132")) == P("231"));
  CHECK(rot(P("e")) == P("e"));
  for (int n = 0; n <= 6; ++n) {
    std::set<Permutation> images;
    for (const Permutation& p : all_permutations(n)) {
      CHECK(rot_inv(rot(p)) == p);
      CHECK(rot(rot_inv(p)) == p);
      images.insert(rot(p));
    }
    CHECK(images.size() == all_permutations(n).size());
  }
}

TEST_CASE("indecomposability") {
  CHECK_FALSE(is_sum_indecomposable(P("12")));
  CHECK(is_sum_indecomposable(P("21")));
  CHECK(is_sum_indecomposable(P("2431")));
  CHECK_FALSE(is_skew_indecomposable(P("2431")));
  CHECK_THROWS_AS(is_sum_indecomposable(P("e")), std::invalid_argument);
}

TEST_CASE("chi") {
  CHECK(chi(5, P("132")) == P("86413257"));
  CHECK(chi(6, P("132")) == P("864132579"));
  CHECK(chi(0, P("3142")) == P("3142"));
  CHECK(chi(1, P("1")) == P("21"));
  CHECK(chi(2, P("1")) == P("213"));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = static_cast<int>(rng() % 6);
    std::vector<int> e(static_cast<std::size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    std::shuffle(e.begin(), e.end(), rng);
    Permutation p(e);
    int m = static_cast<int>(rng() % 7);
    Permutation c = chi(m, p);
    CHECK(c.size() == n + m);
    // The original entries keep their relative order in the middle block.
    std::vector<int> middle(c.entries().begin() + (m + 1) / 2,
                            c.entries().begin() + (m + 1) / 2 + n);
    CHECK(middle == p.entries());
  }
}

TEST_CASE("chi_tilde") {
  CHECK(chi_tilde(2, P("1")) == P("231"));
  CHECK(chi_tilde(0, P("4213")) == P("4213"));
}

TEST_CASE("containment classes") {
  auto c5 = containment_class({P("24135")}, 5);
  CHECK(c5 == std::vector<Permutation>{P("24135")});
  CHECK(containment_class({P("24135")}, 6).empty());
  CHECK(containment_class({P("24135")}, 1) == std::vector<Permutation>{P("1")});
}

TEST_CASE("drop_last_star") {
  CHECK(drop_last_star(P("3142")) == P("213"));
  CHECK(drop_last_star(P("1234")) == P("123"));
  CHECK(drop_last_star(P("21")) == P("1"));
  CHECK_THROWS_AS(drop_last_star(P("e")), std::invalid_argument);
}

TEST_CASE("pattern lists") {
  auto pats = parse_pattern_list("231,1423");
  REQUIRE(pats.size() == 2);
  CHECK(pats[0] == P("231"));
  CHECK(pats[1] == P("1423"));
  CHECK(pattern_list_str(pats) == "231,1423");
  CHECK(parse_pattern_list("3 1 2, 21").size() == 2);
}
