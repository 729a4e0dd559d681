#include "stacksort/trees.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>

namespace stacksort {

std::string family_name(TreeFamily family, int k) {
  switch (family) {
    case TreeFamily::binary: return "binary";
    case TreeFamily::ternary: return "ternary";
    case TreeFamily::kary: return "kary" + std::to_string(k);
    case TreeFamily::motzkin: return "motzkin";
    case TreeFamily::general: return "general";
  }
  return "?";
}

bool family_is_slotted(TreeFamily family) {
  return family == TreeFamily::binary || family == TreeFamily::ternary ||
         family == TreeFamily::kary;
}

namespace {

int family_arity(TreeFamily family, int k) {
  switch (family) {
    case TreeFamily::binary: return 2;
    case TreeFamily::ternary: return 3;
    case TreeFamily::kary:
      if (k < 2 || k > 5) throw std::invalid_argument("kary family requires 2 <= k <= 5");
      return k;
    case TreeFamily::motzkin: return 2;  // child bound, not slot count
    case TreeFamily::general: return 0;
  }
  return 0;
}

}  // namespace

DecreasingPlaneTree make_tree(TreeFamily family, TreePtr root, int k) {
  DecreasingPlaneTree t;
  t.family = family;
  t.arity = family_is_slotted(family) ? family_arity(family, k) : 0;
  t.root = std::move(root);
  return t;
}

namespace {

bool valid_node(const TreeNode& node, const DecreasingPlaneTree& t, int parent_label) {
  if (node.label <= 0) return false;
  if (parent_label > 0 && node.label >= parent_label) return false;
  int children = 0;
  for (const TreePtr& s : node.slots)
    if (s) ++children;
  if (family_is_slotted(t.family)) {
    if (static_cast<int>(node.slots.size()) != t.arity) return false;
  } else {
    if (children != static_cast<int>(node.slots.size())) return false;  // no empty slots
    if (t.family == TreeFamily::motzkin && children > 2) return false;
  }
  for (const TreePtr& s : node.slots)
    if (s && !valid_node(*s, t, node.label)) return false;
  return true;
}

}  // namespace

bool is_valid_tree(const DecreasingPlaneTree& t) {
  if (!t.root) return true;
  return valid_node(*t.root, t, 0);
}

namespace {

void in_order_rec(const TreePtr& node, std::vector<int>& out) {
  if (!node) return;
  in_order_rec(node->slots[0], out);
  out.push_back(node->label);
  in_order_rec(node->slots[1], out);
}

void postorder_rec(const TreePtr& node, std::vector<int>& out) {
  if (!node) return;
  for (const TreePtr& s : node->slots) postorder_rec(s, out);
  out.push_back(node->label);
}

TreePtr in_order_inverse_rec(const std::vector<int>& e, int lo, int hi) {
  if (lo >= hi) return nullptr;
  int m = lo;
  for (int i = lo + 1; i < hi; ++i)
    if (e[static_cast<std::size_t>(i)] > e[static_cast<std::size_t>(m)]) m = i;
  auto node = std::make_shared<TreeNode>();
  node->label = e[static_cast<std::size_t>(m)];
  node->slots = {in_order_inverse_rec(e, lo, m), in_order_inverse_rec(e, m + 1, hi)};
  return node;
}

}  // namespace

Permutation in_order(const DecreasingPlaneTree& t) {
  if (t.family != TreeFamily::binary)
    throw std::invalid_argument("in_order is defined for the binary family only");
  std::vector<int> out;
  in_order_rec(t.root, out);
  return Permutation(std::move(out));
}

DecreasingPlaneTree in_order_inverse(const Permutation& p) {
  return make_tree(TreeFamily::binary, in_order_inverse_rec(p.entries(), 0, p.size()));
}

Permutation postorder(const DecreasingPlaneTree& t) {
  std::vector<int> out;
  postorder_rec(t.root, out);
  return Permutation(std::move(out));
}

namespace {

struct EnumCtx {
  bool slotted = false;
  int slots = 0;         // slots per vertex (slotted families)
  int max_children = 0;  // 0 = unbounded
};

std::vector<TreePtr> enum_word(std::span<const int> word, const EnumCtx& ctx);

// Enumerates the ways to cut `prefix` into consecutive blocks, each of which
// carries at least one tree; appends the resulting parent nodes to `out`.
void enum_splits(std::span<const int> prefix, const EnumCtx& ctx, int root_label,
                 std::vector<std::vector<TreePtr>>& block_choices,
                 std::vector<TreePtr>& out) {
  if (prefix.empty()) {
    const int c = static_cast<int>(block_choices.size());
    std::vector<TreePtr> children(static_cast<std::size_t>(c));
    // Cartesian product over per-block tree choices.
    std::vector<std::size_t> idx(static_cast<std::size_t>(c), 0);
    while (true) {
      for (int i = 0; i < c; ++i)
        children[static_cast<std::size_t>(i)] =
            block_choices[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]];
      if (ctx.slotted) {
        // Place the c children into the slots, left to right, for every
        // choice of occupied slot positions.
        std::vector<int> mask(static_cast<std::size_t>(ctx.slots), 0);
        std::fill(mask.end() - c, mask.end(), 1);
        std::vector<int> positions;
        do {
          auto node = std::make_shared<TreeNode>();
          node->label = root_label;
          node->slots.assign(static_cast<std::size_t>(ctx.slots), nullptr);
          int next = 0;
          for (int s = 0; s < ctx.slots; ++s)
            if (mask[static_cast<std::size_t>(s)])
              node->slots[static_cast<std::size_t>(s)] = children[static_cast<std::size_t>(next++)];
          out.push_back(std::move(node));
        } while (std::next_permutation(mask.begin(), mask.end()));
      } else {
        auto node = std::make_shared<TreeNode>();
        node->label = root_label;
        node->slots = children;
        out.push_back(std::move(node));
      }
      int carry = c - 1;
      while (carry >= 0) {
        auto& i = idx[static_cast<std::size_t>(carry)];
        if (++i < block_choices[static_cast<std::size_t>(carry)].size()) break;
        i = 0;
        --carry;
      }
      if (carry < 0) break;
    }
    return;
  }
  if (ctx.max_children > 0 && static_cast<int>(block_choices.size()) >= ctx.max_children)
    return;
  int block_max = 0;
  for (std::size_t end = 1; end <= prefix.size(); ++end) {
    block_max = std::max(block_max, prefix[end - 1]);
    if (prefix[end - 1] != block_max) continue;  // a block must end with its maximum
    std::vector<TreePtr> sub = enum_word(prefix.first(end), ctx);
    if (sub.empty()) continue;
    block_choices.push_back(std::move(sub));
    enum_splits(prefix.subspan(end), ctx, root_label, block_choices, out);
    block_choices.pop_back();
  }
}

std::vector<TreePtr> enum_word(std::span<const int> word, const EnumCtx& ctx) {
  std::vector<TreePtr> out;
  if (word.empty()) return out;
  const int root_label = word.back();
  for (int v : word)
    if (v > root_label) return out;  // the root must carry the maximum
  std::vector<std::vector<TreePtr>> blocks;
  enum_splits(word.first(word.size() - 1), ctx, root_label, blocks, out);
  return out;
}

}  // namespace

std::vector<DecreasingPlaneTree> enumerate_postorder_preimages(const Permutation& p,
                                                               TreeFamily family, int k) {
  EnumCtx ctx;
  ctx.slotted = family_is_slotted(family);
  if (ctx.slotted) {
    ctx.slots = family_arity(family, k);
    ctx.max_children = ctx.slots;
  } else if (family == TreeFamily::motzkin) {
    ctx.max_children = 2;
  }
  std::vector<DecreasingPlaneTree> out;
  if (p.empty()) {
    out.push_back(make_tree(family, nullptr, k));
    return out;
  }
  for (TreePtr root : enum_word(std::span<const int>(p.entries()), ctx))
    out.push_back(make_tree(family, std::move(root), k));
  return out;
}

namespace {

void skeleton_rec(const TreePtr& node, std::string& out) {
  if (!node) {
    out += '_';
    return;
  }
  out += '(';
  for (const TreePtr& s : node->slots) skeleton_rec(s, out);
  out += ')';
}

void text_rec(const TreePtr& node, std::string& out) {
  if (!node) {
    out += '_';
    return;
  }
  out += std::to_string(node->label);
  if (node->slots.empty()) return;
  out += '(';
  for (std::size_t i = 0; i < node->slots.size(); ++i) {
    if (i) out += ',';
    text_rec(node->slots[i], out);
  }
  out += ')';
}

}  // namespace

std::string skeleton_code(const DecreasingPlaneTree& t) {
  if (!t.root) return "";
  std::string out;
  skeleton_rec(t.root, out);
  return out;
}

std::map<std::string, long long> skeleton_multiset(const std::vector<DecreasingPlaneTree>& trees) {
  std::map<std::string, long long> out;
  for (const DecreasingPlaneTree& t : trees) ++out[skeleton_code(t)];
  return out;
}

std::string tree_to_text(const DecreasingPlaneTree& t) {
  if (!t.root) return "e";
  std::string out;
  text_rec(t.root, out);
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("unsigned 64-bit overflow in addition");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("unsigned 64-bit overflow in multiplication");
  return r;
}

std::uint64_t catalan(int r) {
  if (r < 0) throw std::invalid_argument("catalan expects r >= 0");
  std::uint64_t c = 1;
  for (int i = 0; i < r; ++i) {
    // C_{i+1} = C_i * 2(2i+1) / (i+2), an exact division.
    c = checked_mul(c, 2ull * static_cast<std::uint64_t>(2 * i + 1));
    c /= static_cast<std::uint64_t>(i + 2);
  }
  return c;
}

std::uint64_t motzkin(int r) {
  if (r < 0) throw std::invalid_argument("motzkin expects r >= 0");
  std::vector<std::uint64_t> m(static_cast<std::size_t>(r) + 1, 0);
  m[0] = 1;
  for (int n = 1; n <= r; ++n) {
    std::uint64_t v = m[static_cast<std::size_t>(n - 1)];
    for (int i = 0; i <= n - 2; ++i)
      v = checked_add(v, checked_mul(m[static_cast<std::size_t>(i)],
                                     m[static_cast<std::size_t>(n - 2 - i)]));
    m[static_cast<std::size_t>(n)] = v;
  }
  return m[static_cast<std::size_t>(r)];
}

XYPoly XYPoly::monomial(int i, int j, std::uint64_t c) {
  XYPoly p;
  if (c != 0) p.coeffs_[{i, j}] = c;
  return p;
}

XYPoly XYPoly::operator+(const XYPoly& o) const {
  XYPoly out = *this;
  for (const auto& [key, c] : o.coeffs_) {
    auto it = out.coeffs_.find(key);
    if (it == out.coeffs_.end()) out.coeffs_[key] = c;
    else it->second = checked_add(it->second, c);
  }
  return out;
}

XYPoly XYPoly::operator*(const XYPoly& o) const {
  XYPoly out;
  for (const auto& [ka, ca] : coeffs_)
    for (const auto& [kb, cb] : o.coeffs_) {
      std::pair<int, int> key{ka.first + kb.first, ka.second + kb.second};
      std::uint64_t term = checked_mul(ca, cb);
      auto it = out.coeffs_.find(key);
      if (it == out.coeffs_.end()) out.coeffs_[key] = term;
      else it->second = checked_add(it->second, term);
    }
  return out;
}

std::uint64_t XYPoly::coeff(int i, int j) const {
  auto it = coeffs_.find({i, j});
  return it == coeffs_.end() ? 0 : it->second;
}

std::uint64_t XYPoly::eval_ones() const {
  std::uint64_t v = 0;
  for (const auto& [key, c] : coeffs_) v = checked_add(v, c);
  return v;
}

std::string XYPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += std::to_string(c);
    if (key.first) out += "*x^" + std::to_string(key.first);
    if (key.second) out += "*y^" + std::to_string(key.second);
  }
  return out;
}

XYPoly l_polynomial(int r) {
  if (r < 1) throw std::invalid_argument("l_polynomial expects r >= 1");
  // A_r(x, y) tracks (right edges, leaves); L_r = x * A_r.
  std::vector<XYPoly> a(static_cast<std::size_t>(r) + 1);
  a[1] = XYPoly::monomial(0, 1);
  const XYPoly x = XYPoly::monomial(1, 0);
  for (int v = 2; v <= r; ++v) {
    XYPoly acc = a[static_cast<std::size_t>(v - 1)] + x * a[static_cast<std::size_t>(v - 1)];
    for (int p = 1; p <= v - 2; ++p)
      acc = acc + x * a[static_cast<std::size_t>(p)] * a[static_cast<std::size_t>(v - 1 - p)];
    a[static_cast<std::size_t>(v)] = acc;
  }
  return x * a[static_cast<std::size_t>(r)];
}

}  // namespace stacksort
