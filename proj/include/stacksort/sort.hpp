#pragma once

#include <vector>

#include "stacksort/perm.hpp"

namespace stacksort {

/// One pass of the stack-sorting map: s(LnR) = s(L) s(R) n, s(e) = e.
Permutation sort_once(const Permutation& p);

/// True iff sort_once(sigma) == target, evaluated with an early exit as soon
/// as an emitted entry mismatches the target.
bool sorts_to(const Permutation& sigma, const Permutation& target);

struct PreimageSet {
  Permutation target;
  std::vector<Permutation> members;  // lexicographic order
};

/// Exhaustive search of S_n for the preimages of a normalized permutation.
PreimageSet preimages(const Permutation& p);

/// Union of preimages of a set of same-length normalized permutations.
std::vector<Permutation> preimages_of_set(const std::vector<Permutation>& perms);

/// True iff the permutation has at least one preimage.
bool is_sorted_perm(const Permutation& p);

}  // namespace stacksort
