#include "stacksort/sort.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace stacksort {

namespace {

void sort_rec(const std::vector<int>& v, int lo, int hi, std::vector<int>& out) {
  if (lo >= hi) return;
  int m = lo;
  for (int i = lo + 1; i < hi; ++i)
    if (v[static_cast<std::size_t>(i)] > v[static_cast<std::size_t>(m)]) m = i;
  sort_rec(v, lo, m, out);
  sort_rec(v, m + 1, hi, out);
  out.push_back(v[static_cast<std::size_t>(m)]);
}

// Emits s(v[lo..hi)) entry by entry against target starting at *pos;
// returns false as soon as an emitted entry mismatches.
bool sort_match_rec(const std::vector<int>& v, int lo, int hi,
                    const std::vector<int>& target, std::size_t* pos) {
  if (lo >= hi) return true;
  int m = lo;
  for (int i = lo + 1; i < hi; ++i)
    if (v[static_cast<std::size_t>(i)] > v[static_cast<std::size_t>(m)]) m = i;
  if (!sort_match_rec(v, lo, m, target, pos)) return false;
  if (!sort_match_rec(v, m + 1, hi, target, pos)) return false;
  if (target[*pos] != v[static_cast<std::size_t>(m)]) return false;
  ++*pos;
  return true;
}

}  // namespace

Permutation sort_once(const Permutation& p) {
  std::vector<int> out;
  out.reserve(p.entries().size());
  sort_rec(p.entries(), 0, p.size(), out);
  return Permutation(std::move(out));
}

bool sorts_to(const Permutation& sigma, const Permutation& target) {
  if (sigma.size() != target.size()) return false;
  std::size_t pos = 0;
  return sort_match_rec(sigma.entries(), 0, sigma.size(), target.entries(), &pos);
}

PreimageSet preimages(const Permutation& p) {
  if (!p.is_normalized()) throw std::invalid_argument("preimages expects a normalized permutation");
  PreimageSet out;
  out.target = p;
  for_each_permutation(p.size(), [&](const std::vector<int>& e) {
    Permutation sigma(e);
    if (sorts_to(sigma, p)) out.members.push_back(std::move(sigma));
  });
  return out;
}

std::vector<Permutation> preimages_of_set(const std::vector<Permutation>& perms) {
  if (perms.empty()) return {};
  const int n = perms.front().size();
  std::unordered_set<Permutation, PermHash> targets;
  for (const Permutation& p : perms) {
    if (p.size() != n) throw std::invalid_argument("preimages_of_set expects equal lengths");
    if (!p.is_normalized()) throw std::invalid_argument("preimages_of_set expects normalized permutations");
    targets.insert(p);
  }
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const std::vector<int>& e) {
    Permutation sigma(e);
    if (targets.count(sort_once(sigma))) out.push_back(std::move(sigma));
  });
  return out;
}

bool is_sorted_perm(const Permutation& p) {
  if (!p.is_normalized()) throw std::invalid_argument("is_sorted_perm expects a normalized permutation");
  if (p.empty()) return true;
  // A sorted permutation ends with its maximum; skip the sweep otherwise.
  if (p.value_at(p.size()) != p.size()) return false;
  bool found = false;
  std::vector<int> e(p.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<int>(i) + 1;
  do {
    if (sorts_to(Permutation(e), p)) {
      found = true;
      break;
    }
  } while (std::next_permutation(e.begin(), e.end()));
  return found;
}

}  // namespace stacksort
