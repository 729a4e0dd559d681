#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "stacksort/perm.hpp"
#include "stacksort/sort.hpp"
#include "stacksort/stats.hpp"
#include "stacksort/trees.hpp"
#include "test_oracles.hpp"

using namespace stacksort;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
}

TEST_CASE("in-order bijection on the running trees") {
  const Permutation left = P("4276153"), right = P("2476153");
  DecreasingPlaneTree tl = in_order_inverse(left), tr = in_order_inverse(right);
  CHECK(is_valid_tree(tl));
  CHECK(is_valid_tree(tr));
  CHECK(in_order(tl) == left);
  CHECK(in_order(tr) == right);
  CHECK(postorder(tl) == P("2413567"));
  CHECK(postorder(tr) == P("2413567"));
  CHECK(in_order_inverse(P("1")).root->label == 1);
}

TEST_CASE("in_order rejects non-binary families") {
  auto trees = enumerate_postorder_preimages(P("3214"), TreeFamily::ternary);
  REQUIRE_FALSE(trees.empty());
  CHECK_THROWS_AS(in_order(trees.front()), std::invalid_argument);
}

TEST_CASE("postorder basics") {
  auto node = std::make_shared<TreeNode>();
  node->label = 5;
  DecreasingPlaneTree t = make_tree(TreeFamily::general, node);
  CHECK(postorder(t) == Permutation({5}));
  CHECK(postorder(make_tree(TreeFamily::binary, nullptr)) == P("e"));
}

TEST_CASE("sorting factors through in-order and postorder") {
  for (int n = 0; n <= 6; ++n)
    for (const Permutation& sigma : all_permutations(n))
      CHECK(postorder(in_order_inverse(sigma)) == sort_once(sigma));
}

TEST_CASE("postorder preimage enumeration") {
  CHECK_FALSE(enumerate_postorder_preimages(P("3214"), TreeFamily::ternary).empty());
  CHECK(enumerate_postorder_preimages(P("3214"), TreeFamily::binary).empty());
  std::set<Permutation> readings;
  for (const DecreasingPlaneTree& t : enumerate_postorder_preimages(P("2413567"), TreeFamily::binary))
    readings.insert(in_order(t));
  CHECK(readings.count(P("4276153")) == 1);
  CHECK(readings.count(P("2476153")) == 1);
}

TEST_CASE("enumerated trees are valid members of their family") {
  const std::vector<std::pair<TreeFamily, int>> families{
      {TreeFamily::binary, 0}, {TreeFamily::ternary, 0}, {TreeFamily::kary, 4},
      {TreeFamily::motzkin, 0}, {TreeFamily::general, 0}};
  for (int n = 1; n <= 5; ++n)
    for (const Permutation& p : all_permutations(n))
      for (const auto& [fam, k] : families)
        for (const DecreasingPlaneTree& t : enumerate_postorder_preimages(p, fam, k)) {
          CHECK(is_valid_tree(t));
          CHECK(postorder(t) == p);
        }
}

TEST_CASE("kary bounds") {
  CHECK_THROWS_AS(enumerate_postorder_preimages(P("1"), TreeFamily::kary, 6), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_postorder_preimages(P("1"), TreeFamily::kary, 1), std::invalid_argument);
  CHECK(enumerate_postorder_preimages(P("21"), TreeFamily::kary, 5).size() == 5);
}

TEST_CASE("skeleton multisets") {
  auto collect = [](const std::vector<Permutation>& perms, TreeFamily fam) {
    std::vector<DecreasingPlaneTree> trees;
    for (const Permutation& p : perms)
      for (DecreasingPlaneTree& t : enumerate_postorder_preimages(p, fam)) trees.push_back(std::move(t));
    return skeleton_multiset(trees);
  };
  // Equal sets produce equal multisets.
  auto base = collect(enumerate_av(4, {P("123")}), TreeFamily::binary);
  CHECK(base == collect(enumerate_av(4, {P("123")}), TreeFamily::binary));
  // Forbidding 3214 changes nothing among binary trees at length 4 ...
  CHECK(base == collect(enumerate_av(4, {P("123"), P("3214")}), TreeFamily::binary));
  // ... but the two four-element preimage sets are shape distinguishable.
  auto lhs = skeleton_multiset({in_order_inverse(P("3412")), in_order_inverse(P("3421"))});
  auto rhs = skeleton_multiset({in_order_inverse(P("3142")), in_order_inverse(P("1342"))});
  CHECK_FALSE(lhs == rhs);
}

TEST_CASE("tree text form") {
  DecreasingPlaneTree t = in_order_inverse(P("231"));
  CHECK(tree_to_text(t) == "3(2(_,_),1(_,_))");
  CHECK(tree_to_text(make_tree(TreeFamily::binary, nullptr)) == "e");
}

TEST_CASE("skeleton codes of slotted trees mark empty slots") {
  DecreasingPlaneTree t = in_order_inverse(P("231"));
  CHECK(skeleton_code(t) == "((__)(__))");
  CHECK(skeleton_code(in_order_inverse(P("12"))) != skeleton_code(in_order_inverse(P("21"))));
  // The shape code of a permutation matches the shape code of its tree.
  for (const Permutation& p : all_permutations(5))
    CHECK(skeleton_of_perm(p) == skeleton_code(in_order_inverse(p)));
}

TEST_CASE("catalan and motzkin values") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(8) == 1430);
  CHECK(motzkin(0) == 1);
  CHECK(motzkin(4) == 9);
  CHECK(motzkin(6) == 51);
  CHECK_THROWS_AS(catalan(40), std::overflow_error);
}

TEST_CASE("l-polynomial") {
  CHECK(l_polynomial(1) == XYPoly::monomial(1, 1));
  for (int r = 1; r <= 12; ++r) CHECK(l_polynomial(r).eval_ones() == catalan(r));
  // Two vertices: one tree with a left child, one with a right edge.
  XYPoly l2 = l_polynomial(2);
  CHECK(l2.coeff(1, 1) == 1);
  CHECK(l2.coeff(2, 1) == 1);
  CHECK_THROWS_AS(l_polynomial(0), std::invalid_argument);
}

TEST_CASE("xy polynomial arithmetic is overflow checked") {
  XYPoly big = XYPoly::monomial(0, 0, ~0ull);
  CHECK_THROWS_AS(big + XYPoly::one(), std::overflow_error);
  CHECK_THROWS_AS(big * XYPoly::monomial(1, 0, 2), std::overflow_error);
}

TEST_CASE("motzkin shape counts") {
  for (int r = 1; r <= 8; ++r) {
    auto shapes = test_oracles::motzkin_shapes(r);
    std::set<std::string> distinct(shapes.begin(), shapes.end());
    CHECK(distinct.size() == shapes.size());
    CHECK(shapes.size() == motzkin(r - 1));
  }
  // The labeled enumeration reaches exactly these shapes.
  for (int r = 1; r <= 6; ++r) {
    std::set<std::string> seen;
    for (const Permutation& p : all_permutations(r))
      for (const DecreasingPlaneTree& t : enumerate_postorder_preimages(p, TreeFamily::motzkin))
        seen.insert(skeleton_code(t));
    auto oracle = test_oracles::motzkin_shapes(r);
    CHECK(seen == std::set<std::string>(oracle.begin(), oracle.end()));
  }
}
