#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "stacksort/perm.hpp"
#include "stacksort/sliding.hpp"
#include "stacksort/sort.hpp"
#include "stacksort/stats.hpp"
#include "stacksort/vhc.hpp"

using namespace stacksort;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
}

TEST_CASE("worked values") {
  CHECK(swu(P("1423")) == P("3412"));
  CHECK(swu(P("2143")) == P("3241"));
  CHECK(swl(P("3124")) == P("1324"));
  for (const Permutation& p : all_permutations(2)) CHECK(swu(p) == p);
  CHECK(swu(P("e")) == P("e"));
}

TEST_CASE("forbidden patterns are rejected") {
  CHECK_THROWS_AS(swu(P("231")), std::invalid_argument);
  CHECK_THROWS_AS(swu_inv(P("132")), std::invalid_argument);
  CHECK_THROWS_AS(swl(P("132")), std::invalid_argument);
  CHECK_THROWS_AS(swl(P("2431")), std::invalid_argument);
  CHECK_THROWS_AS(swl_inv(P("312")), std::invalid_argument);
}

TEST_CASE("bijection properties at small lengths") {
  for (int n = 0; n <= 6; ++n) {
    auto av231 = enumerate_av(n, {P("231")});
    auto av132 = enumerate_av(n, {P("132")});
    auto av312 = enumerate_av(n, {P("312")});
    std::vector<Permutation> images;
    for (const Permutation& p : av231) {
      Permutation q = swu(p);
      CHECK(descent_set(q) == descent_set(p));
      CHECK(tail_length(q) == tail_length(p));
      CHECK(swu_inv(q) == p);
      images.push_back(std::move(q));
    }
    std::sort(images.begin(), images.end());
    CHECK(images == av132);

    images.clear();
    for (const Permutation& p : av132) {
      Permutation q = swl(p);
      CHECK(q == rot_inv(swu(rot(p))));
      CHECK(des(q) == des(p));
      CHECK(tail_length(q) == tail_length(p));
      CHECK(swl_inv(q) == p);
      images.push_back(std::move(q));
    }
    std::sort(images.begin(), images.end());
    CHECK(images == av312);

    images.clear();
    for (const Permutation& p : enumerate_av(n, {P("132"), P("231")})) images.push_back(swl(p));
    std::sort(images.begin(), images.end());
    CHECK(images == enumerate_av(n, {P("231"), P("312")}));
  }
}

TEST_CASE("sliding on arbitrary label sets transports along normalization") {
  std::mt19937 rng(4242);
  int done = 0;
  while (done < 60) {
    int n = 1 + static_cast<int>(rng() % 6);
    std::set<int> labels;
    while (static_cast<int>(labels.size()) < n) labels.insert(1 + static_cast<int>(rng() % 60));
    std::vector<int> e(labels.begin(), labels.end());
    std::shuffle(e.begin(), e.end(), rng);
    Permutation p(e);
    if (contains(normalize(p), P("231"))) continue;
    ++done;
    Permutation expected = unnormalize(swu(normalize(p)), p.entries());
    CHECK(swu(p) == expected);
    std::vector<int> sorted_labels(labels.begin(), labels.end());
    CHECK(swu(p).entries() != std::vector<int>{});  // same label set as input
    std::vector<int> got = swu(p).entries();
    std::sort(got.begin(), got.end());
    CHECK(got == sorted_labels);
  }
}

TEST_CASE("class image identity") {
  for (int n = 0; n <= 7; ++n) CHECK(swu_class_image({P("231")}, n));
  for (int n = 0; n <= 6; ++n) {
    CHECK(swu_class_image({P("231"), P("1423")}, n));
    CHECK(swu_class_image({P("231"), chi(2, P("1"))}, n));
  }
  CHECK_THROWS_AS(swu_class_image({P("132")}, 3), std::invalid_argument);
}

TEST_CASE("theta base cases") {
  // The hookless configuration of the identity is fixed.
  HookConfig id_cfg{P("12"), {}};
  HookConfig out = theta(P("12"), id_cfg);
  CHECK(out.base == P("12"));
  CHECK(out.hooks.empty());
  CHECK_THROWS_AS(theta(P("132"), HookConfig{P("132"), {}}), std::invalid_argument);
  CHECK_THROWS_AS(theta(P("12"), HookConfig{P("21"), {}}), std::invalid_argument);
}

TEST_CASE("theta is a type-preserving bijection at small lengths") {
  for (int n = 0; n <= 6; ++n)
    for (const Permutation& p : enumerate_av(n, {P("132"), P("3412")})) {
      auto cfgs = enumerate_vhcs(p);
      Permutation q = swl(p);
      auto target = enumerate_vhcs(q);
      std::vector<HookConfig> images;
      for (const HookConfig& h : cfgs) {
        HookConfig img = theta(p, h);
        CHECK(img.base == q);
        CHECK(is_valid_vhc(img));
        CHECK(type_of(induced_composition(img)) == type_of(induced_composition(h)));
        images.push_back(std::move(img));
      }
      std::sort(images.begin(), images.end());
      std::sort(target.begin(), target.end());
      CHECK(images == target);
    }
}

TEST_CASE("theta respects fixed points of the sliding map") {
  // Any configuration of a permutation fixed by swl is carried unchanged.
  Permutation p = P("2314");  // swl(2314)?
  if (!contains(p, P("132")) && swl(p) == p) {
    for (const HookConfig& h : enumerate_vhcs(p)) CHECK(theta(p, h) == h);
  }
  // Identity permutations are always fixed.
  for (int n = 1; n <= 6; ++n) {
    Permutation id = Permutation::identity(n);
    CHECK(swl(id) == id);
    for (const HookConfig& h : enumerate_vhcs(id)) CHECK(theta(id, h) == h);
  }
}
