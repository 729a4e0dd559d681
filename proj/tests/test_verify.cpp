#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stacksort/perm.hpp"
#include "stacksort/series.hpp"
#include "stacksort/sliding.hpp"
#include "stacksort/trees.hpp"
#include "stacksort/verify.hpp"

using namespace stacksort;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
}

TEST_CASE("rational series arithmetic") {
  RationalSeries u{1, -4, -4};
  RationalSeries root = series_sqrt(u, 12);
  RationalSeries square = series_mul(root, root, 12);
  for (std::size_t i = 0; i < 12; ++i)
    CHECK(square[i] == (i < u.size() ? u[i] : BigRational(0)));
  CHECK_THROWS_AS(series_sqrt(RationalSeries{2, 1}, 4), std::invalid_argument);
}

TEST_CASE("boolean-catalan coefficients") {
  // Frozen from the defining quadratic recurrence b_n = 2 b_{n-1}
  // + 2 sum b_i b_{n-1-i}, evaluated by hand for the first terms.
  CHECK(boolean_catalan_sequence(5) == std::vector<long long>{1, 2, 6, 20, 72});
  CHECK(boolean_catalan_sequence(1) == std::vector<long long>{1});
  auto seq = boolean_catalan_sequence(9);
  std::vector<long long> rec{1};
  for (int n = 2; n <= 9; ++n) {
    long long v = 2 * rec.back();
    for (int i = 1; i <= n - 2; ++i)
      v += 2 * rec[static_cast<std::size_t>(i - 1)] * rec[static_cast<std::size_t>(n - 2 - i)];
    rec.push_back(v);
  }
  CHECK(seq == rec);
}

TEST_CASE("pattern families") {
  auto fa = family_A(0);
  CHECK(std::find(fa.begin(), fa.end(), P("1")) != fa.end());
  CHECK(std::find(fa.begin(), fa.end(), P("12")) != fa.end());
  CHECK(std::find(fa.begin(), fa.end(), P("1423")) != fa.end());
  CHECK(std::find(fa.begin(), fa.end(), P("2143")) != fa.end());
  CHECK(chi(2, P("1")).size() == 3);
  auto fb = family_B(2);
  CHECK(std::find(fb.begin(), fb.end(), P("231")) != fb.end());  // chi_tilde_2(1)
  CHECK(family_A(3).size() == 16);
  CHECK(family_B(3).size() == 12);
  // Every family member lands in the domain of its sliding operator.
  for (const Permutation& pat : family_A(3)) CHECK_FALSE(contains(pat, P("231")));
  for (const Permutation& pat : family_B(3)) CHECK_FALSE(contains(pat, P("132")));
}

TEST_CASE("class specs") {
  ClassSpec av = ClassSpec::av({P("231"), P("132")});
  CHECK(av.str() == "Av(231,132)");
  CHECK(av.members(3).size() == 4);
  CHECK(av.member(P("312")));
  CHECK_FALSE(av.member(P("231")));
  ClassSpec cont = ClassSpec::contained_in({P("24135")});
  CHECK(cont.str() == "C(24135)");
  CHECK(cont.member(P("2413")));
  CHECK_FALSE(cont.member(P("321")));
  CHECK(cont.members(6).empty());
}

TEST_CASE("fertility equivalence checks") {
  CHECK(check_fertility_wilf(ClassSpec::av({P("231")}), ClassSpec::av({P("132")}), 6).pass);
  CHECK(check_fertility_wilf(ClassSpec::av({P("132"), P("231")}),
                             ClassSpec::av({P("231"), P("312")}), 6)
            .pass);
  CHECK(check_fertility_wilf(ClassSpec::av({P("132"), P("312"), P("321")}),
                             ClassSpec::av({P("132"), P("231"), P("321")}), 6)
            .pass);
  auto bad = check_fertility_wilf(ClassSpec::av({P("321")}), ClassSpec::av({P("123")}), 6);
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.witness.is_null());
}

TEST_CASE("strong fertility checks and the separating classes") {
  CHECK(check_strong_fertility_wilf(ClassSpec::av({P("132"), P("3412")}),
                                    ClassSpec::av({P("312"), P("1342")}), 6)
            .pass);
  ClassSpec d1 = ClassSpec::contained_in({P("24135")});
  ClassSpec d2 = ClassSpec::contained_in({P("32415"), P("31425"), P("21435"), P("42135")});
  auto sep = check_strong_fertility_wilf(d1, d2, 5);
  CHECK_FALSE(sep.pass);
  CHECK(sep.witness["n"] == 5);
  CHECK(sep.witness["lhs_total"] == 1);
  CHECK(sep.witness["rhs_total"] == 4);
  // Yet their fertilities agree everywhere.
  CHECK(check_fertility_wilf(d1, d2, 7).pass);
  CHECK(check_strong_fertility_wilf(d1, d1, 5).pass);
}

TEST_CASE("postorder equivalence checks") {
  std::vector<std::pair<TreeFamily, int>> binary{{TreeFamily::binary, 0}};
  std::vector<std::pair<TreeFamily, int>> ternary{{TreeFamily::ternary, 0}};
  ClassSpec a = ClassSpec::av({P("123")});
  ClassSpec b = ClassSpec::av({P("123"), P("3214")});
  CHECK(check_postorder_wilf(a, b, 5, binary).pass);
  auto fail = check_postorder_wilf(a, b, 4, ternary);
  CHECK_FALSE(fail.pass);
  CHECK(fail.witness["n"] == 4);
  CHECK(check_postorder_wilf(ClassSpec::av({P("231")}), ClassSpec::av({P("132")}), 5,
                             {{TreeFamily::binary, 0}, {TreeFamily::ternary, 0},
                              {TreeFamily::motzkin, 0}})
            .pass);
}

TEST_CASE("joint distribution checks") {
  CHECK(check_joint_distribution(ClassSpec::av({P("132"), P("231")}),
                                 ClassSpec::av({P("231"), P("312")}),
                                 {"des", "peak", "zeil"}, 6)
            .pass);
  CHECK(check_joint_distribution(ClassSpec::av({P("231")}), ClassSpec::av({P("132")}),
                                 {"desset", "lmax", "rmax", "zeil"}, 6)
            .pass);
  auto fail = check_joint_distribution(ClassSpec::av({P("132"), P("3412")}),
                                       ClassSpec::av({P("312"), P("1342")}), {"rmax"}, 4);
  CHECK_FALSE(fail.pass);
  CHECK(fail.witness["n"] == 4);
}

TEST_CASE("tail recursion of classified preimage sets") {
  CHECK(check_zeil_recursion(5).pass);
}

TEST_CASE("claim registry") {
  auto ids = all_claim_ids();
  CHECK(ids.size() == 14);
  for (const std::string& id : acceptance_claim_ids())
    CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
  CHECK_THROWS_AS(run_claim("nope"), std::invalid_argument);

  RunConfig small;
  small.n_max = 4;
  for (const std::string& id : {"worked-examples", "fertility-formula", "zeil-min-identity"}) {
    auto r = run_claim(id, small);
    CHECK(r.pass);
    CHECK(r.ms >= 0);
    auto j = r.to_json();
    CHECK(j["claim"] == r.claim);
    CHECK(j["status"] == "pass");
  }
}

TEST_CASE("class preimage helpers") {
  ClassSpec all = ClassSpec::av({});
  CHECK(class_preimage_count(all, 4) == 24);
  CHECK(class_preimage_members(all, 0).size() == 1);
  ClassSpec c = ClassSpec::contained_in({P("24135")});
  CHECK(class_preimage_count(c, 9) == 0);
  std::vector<long long> seq;
  for (int n = 1; n <= 5; ++n) seq.push_back(class_preimage_count(c, n));
  CHECK(seq == std::vector<long long>{1, 2, 6, 10, 4});
}
