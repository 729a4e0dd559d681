#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "stacksort/perm.hpp"

namespace stacksort {

/// Tree families. Slotted families fix the number of (possibly empty)
/// subtree slots per vertex; slotless families have no empty slots.
enum class TreeFamily {
  binary,   // 2 slots
  ternary,  // 3 slots
  kary,     // k slots, 2 <= k <= 5
  motzkin,  // slotless, at most 2 children
  general,  // slotless, unbounded arity
};

std::string family_name(TreeFamily family, int k = 0);
bool family_is_slotted(TreeFamily family);

struct TreeNode;
using TreePtr = std::shared_ptr<const TreeNode>;

struct TreeNode {
  int label = 0;
  std::vector<TreePtr> slots;  // nullptr marks an empty slot (slotted families)
};

/// A labeled rooted plane tree in which every child label is strictly
/// smaller than its parent label. A null root is the empty tree.
struct DecreasingPlaneTree {
  TreeFamily family = TreeFamily::binary;
  int arity = 2;  // slots per vertex for slotted families
  TreePtr root;
};

DecreasingPlaneTree make_tree(TreeFamily family, TreePtr root, int k = 0);
bool is_valid_tree(const DecreasingPlaneTree& t);

/// In-order reading; defined for the binary family only.
Permutation in_order(const DecreasingPlaneTree& t);
/// The unique decreasing binary plane tree whose in-order reading is p.
DecreasingPlaneTree in_order_inverse(const Permutation& p);

/// Subtrees left to right (each in postorder), then the root label.
Permutation postorder(const DecreasingPlaneTree& t);

/// All decreasing trees of the family whose postorder is p.
/// Deterministic order. `k` is required for the kary family.
std::vector<DecreasingPlaneTree> enumerate_postorder_preimages(const Permutation& p,
                                                               TreeFamily family, int k = 0);

/// Canonical shape code with labels stripped; "_" marks an empty slot.
std::string skeleton_code(const DecreasingPlaneTree& t);
std::map<std::string, long long> skeleton_multiset(const std::vector<DecreasingPlaneTree>& trees);

/// Nested-parenthesis text with labels; "_" marks an empty slot.
std::string tree_to_text(const DecreasingPlaneTree& t);

/// Exact values; throws std::overflow_error instead of wrapping.
std::uint64_t catalan(int r);
std::uint64_t motzkin(int r);

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

/// Polynomial in x and y with unsigned 64-bit coefficients; arithmetic is
/// overflow-checked.
class XYPoly {
public:
  XYPoly() = default;
  static XYPoly zero() { return XYPoly(); }
  static XYPoly one() { return monomial(0, 0); }
  static XYPoly monomial(int i, int j, std::uint64_t c = 1);

  XYPoly operator+(const XYPoly& o) const;
  XYPoly operator*(const XYPoly& o) const;

  std::uint64_t coeff(int i, int j) const;
  std::uint64_t eval_ones() const;
  bool is_zero() const { return coeffs_.empty(); }

  const std::map<std::pair<int, int>, std::uint64_t>& coeffs() const { return coeffs_; }

  friend bool operator==(const XYPoly&, const XYPoly&) = default;
  std::string str() const;

private:
  std::map<std::pair<int, int>, std::uint64_t> coeffs_;
};

/// L_r(x, y) = sum over binary plane trees with r vertices of
/// x^(right edges + 1) y^(leaves). L_r(1,1) is the r-th Catalan number.
XYPoly l_polynomial(int r);

}  // namespace stacksort
