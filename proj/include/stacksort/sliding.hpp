#pragma once

#include "stacksort/perm.hpp"
#include "stacksort/vhc.hpp"

namespace stacksort {

/// The "southwest up" sliding bijection from 231-avoiding to 132-avoiding
/// permutations: with p = L + (1 - R) split at the maximum, swu(p) =
/// (swu(L) + 1) - swu(R). Accepts permutations of arbitrary label sets; the
/// result uses the same labels. Throws if p contains 231.
Permutation swu(const Permutation& p);
/// Inverse of swu; throws if p contains 132.
Permutation swu_inv(const Permutation& p);

/// The "southwest left" bijection rot_inv . swu . rot from 132-avoiding to
/// 312-avoiding permutations. Throws if p contains 132.
Permutation swl(const Permutation& p);
/// Inverse of swl; throws if p contains 312.
Permutation swl_inv(const Permutation& p);

/// True iff swu maps Av_n(patterns) onto Av_n(132, swu images of the other
/// patterns). The pattern list must include 231.
bool swu_class_image(const std::vector<Permutation>& patterns, int n);

/// Type-preserving bijection from the valid hook configurations of p to
/// those of swl(p), built recursively by splitting at the hook anchored at
/// the entry before the fixed-point tail. p must avoid 132 and 3412.
HookConfig theta(const Permutation& p, const HookConfig& h);

}  // namespace stacksort
