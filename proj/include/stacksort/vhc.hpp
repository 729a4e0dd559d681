#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stacksort/perm.hpp"
#include "stacksort/trees.hpp"

namespace stacksort {

/// A hook of a permutation, stored as 1-based positions of its southwest and
/// northeast endpoints. Values are read from the owning base permutation.
struct Hook {
  int sw = 0;
  int ne = 0;
  friend bool operator==(const Hook&, const Hook&) = default;
  friend auto operator<=>(const Hook&, const Hook&) = default;
};

/// A hook configuration over a base permutation, one hook per descent,
/// ordered by southwest position. The base is part of the identity of the
/// configuration.
struct HookConfig {
  Permutation base;
  std::vector<Hook> hooks;
  friend bool operator==(const HookConfig&, const HookConfig&) = default;
  friend auto operator<=>(const HookConfig&, const HookConfig&) = default;
  std::string str() const;
};

using Composition = std::vector<int>;
using PartitionType = std::vector<int>;

/// Points (i, p_i) at the descents of p.
std::vector<std::pair<int, int>> descent_tops(const Permutation& p);

/// All valid hook configurations of p. The empty permutation and every
/// descent-free permutation have exactly the hookless configuration; a
/// nonempty permutation not ending in its maximum has none.
std::vector<HookConfig> enumerate_vhcs(const Permutation& p);

/// Checks the three validity conditions: southwest endpoints are exactly the
/// descent tops, no point lies directly above a hook, and hooks neither
/// cross nor overlap except northeast-to-southwest chaining.
bool is_valid_vhc(const HookConfig& h);

/// The composition (q_0, ..., q_k) of color-class sizes induced by the
/// configuration's coloring: q_0 counts points that see the sky, q_t the
/// points that see hook t. Empty base gives the empty composition;
/// a descent-free base of length n gives (n).
Composition induced_composition(const HookConfig& h);

/// Parts rearranged in nonincreasing order.
PartitionType type_of(const Composition& c);

std::string composition_str(const Composition& c);

/// Number of preimages of p under the stack-sorting map, computed as
/// sum over valid compositions of the product of Catalan numbers.
std::uint64_t fertility_via_vhc(const Permutation& p);

/// Sum over valid compositions of the product of L_{q_t}(x, y); the
/// coefficient of x^(a+1) y^(b+1) counts preimages with a descents and b
/// peaks. The empty permutation yields the constant 1.
XYPoly fertility_polynomial(const Permutation& p);

enum class WeightFamily { catalan, motzkin };

/// Sum over valid compositions of the product of f(q_t), where f(q) = C_q
/// for the catalan weighting and f(q) = M_{q-1} for the motzkin weighting.
std::uint64_t weighted_count(const Permutation& p, WeightFamily family);

/// Splits a configuration containing hook H (whose northeast position must
/// exceed every descent of the base) into the configuration on the
/// unsheltered subpermutation p_1..p_sw p_{ne+1}..p_n and the one on the
/// sheltered subpermutation p_{sw+1}..p_{ne-1}, with H removed.
std::pair<HookConfig, HookConfig> split_by_hook(const HookConfig& h, Hook H);

/// Inverse of split_by_hook: reassembles a configuration of `base` from the
/// parts and the hook H.
HookConfig join_by_hook(const Permutation& base, Hook H, const HookConfig& unsheltered,
                        const HookConfig& sheltered);

/// Rebases a configuration onto a permutation with the same normalization,
/// keeping hook positions.
HookConfig transport_config(const HookConfig& h, const Permutation& new_base);

}  // namespace stacksort
