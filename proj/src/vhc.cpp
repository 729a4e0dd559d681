#include "stacksort/vhc.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace stacksort {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::vector<int> descent_positions(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i < p.size(); ++i)
    if (p.value_at(i) > p.value_at(i + 1)) out.push_back(i);
  return out;
}

// Condition on a pair of hooks with a.sw < b.sw, assuming each hook already
// satisfies the no-point-above condition: the index intervals must nest
// strictly or be disjoint up to chaining at a shared endpoint.
bool pair_allowed(const Hook& a, const Hook& b) {
  return b.sw >= a.ne || b.ne < a.ne;
}

}  // namespace

std::string HookConfig::str() const {
  std::string out = base.str();
  for (const Hook& h : hooks)
    out += " (" + std::to_string(h.sw) + "," + std::to_string(h.ne) + ")";
  return out;
}

std::vector<std::pair<int, int>> descent_tops(const Permutation& p) {
  require(p.is_normalized(), "descent_tops expects a normalized permutation");
  std::vector<std::pair<int, int>> out;
  for (int i : descent_positions(p)) out.push_back({i, p.value_at(i)});
  return out;
}

std::vector<HookConfig> enumerate_vhcs(const Permutation& p) {
  const std::vector<int> descents = descent_positions(p);
  const int k = static_cast<int>(descents.size());
  std::vector<HookConfig> out;
  std::vector<Hook> chosen;  // hooks for descents k-1, k-2, ... (right to left)

  // Candidate northeast endpoints for a hook anchored at position i are the
  // positions j > i whose value starts a new running maximum of p_i..p_j;
  // this is exactly the no-point-above condition.
  auto candidates = [&](int i) {
    std::vector<int> cand;
    int running = p.value_at(i);
    for (int j = i + 1; j <= p.size(); ++j) {
      if (p.value_at(j) > running) {
        running = p.value_at(j);
        cand.push_back(j);
      }
    }
    return cand;
  };

  std::function<void(int)> place = [&](int t) {
    if (t < 0) {
      HookConfig cfg;
      cfg.base = p;
      cfg.hooks.assign(chosen.rbegin(), chosen.rend());
      out.push_back(std::move(cfg));
      return;
    }
    const int sw = descents[static_cast<std::size_t>(t)];
    for (int ne : candidates(sw)) {
      Hook h{sw, ne};
      bool ok = true;
      for (const Hook& placed : chosen) {
        if (!pair_allowed(h, placed)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(h);
      place(t - 1);
      chosen.pop_back();
    }
  };
  place(k - 1);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_valid_vhc(const HookConfig& h) {
  const Permutation& p = h.base;
  const std::vector<int> descents = descent_positions(p);
  if (h.hooks.size() != descents.size()) return false;
  for (std::size_t t = 0; t < h.hooks.size(); ++t)
    if (h.hooks[t].sw != descents[t]) return false;
  const int n = p.size();
  for (const Hook& hook : h.hooks) {
    if (!(1 <= hook.sw && hook.sw < hook.ne && hook.ne <= n)) return false;
    if (p.value_at(hook.sw) >= p.value_at(hook.ne)) return false;
    for (int q = hook.sw + 1; q < hook.ne; ++q)
      if (p.value_at(q) > p.value_at(hook.ne)) return false;
  }
  for (std::size_t a = 0; a < h.hooks.size(); ++a)
    for (std::size_t b = a + 1; b < h.hooks.size(); ++b)
      if (!pair_allowed(h.hooks[a], h.hooks[b])) return false;
  return true;
}

Composition induced_composition(const HookConfig& h) {
  require(is_valid_vhc(h), "induced_composition expects a valid configuration");
  const Permutation& p = h.base;
  const int n = p.size();
  if (n == 0) return {};
  const int k = static_cast<int>(h.hooks.size());
  std::vector<char> is_ne(static_cast<std::size_t>(n) + 1, 0);
  for (const Hook& hook : h.hooks) is_ne[static_cast<std::size_t>(hook.ne)] = 1;
  Composition q(static_cast<std::size_t>(k) + 1, 0);
  for (int pos = 1; pos <= n; ++pos) {
    if (is_ne[static_cast<std::size_t>(pos)]) continue;
    // The covering hooks nest; the innermost (largest sw) is the one seen.
    int color = 0;
    for (int t = 0; t < k; ++t)
      if (h.hooks[static_cast<std::size_t>(t)].sw < pos && pos < h.hooks[static_cast<std::size_t>(t)].ne)
        color = t + 1;
    ++q[static_cast<std::size_t>(color)];
  }
  return q;
}

PartitionType type_of(const Composition& c) {
  PartitionType t = c;
  std::sort(t.begin(), t.end(), std::greater<int>());
  return t;
}

std::string composition_str(const Composition& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  out += ')';
  return out;
}

std::uint64_t fertility_via_vhc(const Permutation& p) {
  require(p.is_normalized(), "fertility_via_vhc expects a normalized permutation");
  std::uint64_t total = 0;
  for (const HookConfig& h : enumerate_vhcs(p)) {
    std::uint64_t prod = 1;
    for (int q : induced_composition(h)) prod = checked_mul(prod, catalan(q));
    total = checked_add(total, prod);
  }
  return total;
}

XYPoly fertility_polynomial(const Permutation& p) {
  require(p.is_normalized(), "fertility_polynomial expects a normalized permutation");
  XYPoly total;
  for (const HookConfig& h : enumerate_vhcs(p)) {
    XYPoly prod = XYPoly::one();
    for (int q : induced_composition(h)) prod = prod * l_polynomial(q);
    total = total + prod;
  }
  return total;
}

std::uint64_t weighted_count(const Permutation& p, WeightFamily family) {
  require(p.is_normalized(), "weighted_count expects a normalized permutation");
  std::uint64_t total = 0;
  for (const HookConfig& h : enumerate_vhcs(p)) {
    std::uint64_t prod = 1;
    for (int q : induced_composition(h)) {
      std::uint64_t w = family == WeightFamily::catalan ? catalan(q) : motzkin(q - 1);
      prod = checked_mul(prod, w);
    }
    total = checked_add(total, prod);
  }
  return total;
}

namespace {

Permutation subsequence(const Permutation& p, int lo1, int hi1, int lo2, int hi2) {
  std::vector<int> out;
  for (int i = lo1; i <= hi1; ++i) out.push_back(p.value_at(i));
  for (int i = lo2; i <= hi2; ++i) out.push_back(p.value_at(i));
  return Permutation(std::move(out));
}

}  // namespace

std::pair<HookConfig, HookConfig> split_by_hook(const HookConfig& h, Hook H) {
  auto it = std::find(h.hooks.begin(), h.hooks.end(), H);
  require(it != h.hooks.end(), "split_by_hook: H must belong to the configuration");
  const std::vector<int> descents = descent_positions(h.base);
  require(descents.empty() || H.ne > descents.back(),
          "split_by_hook: H's northeast position must exceed every descent");
  const int n = h.base.size();

  HookConfig u, s;
  u.base = subsequence(h.base, 1, H.sw, H.ne + 1, n);
  s.base = subsequence(h.base, H.sw + 1, H.ne - 1, 1, 0);
  for (const Hook& hook : h.hooks) {
    if (hook == H) continue;
    if (hook.sw < H.sw) {
      Hook m = hook;
      if (m.ne > H.ne) m.ne = H.sw + (m.ne - H.ne);
      u.hooks.push_back(m);
    } else {
      s.hooks.push_back(Hook{hook.sw - H.sw, hook.ne - H.sw});
    }
  }
  return {std::move(u), std::move(s)};
}

HookConfig join_by_hook(const Permutation& base, Hook H, const HookConfig& unsheltered,
                        const HookConfig& sheltered) {
  const std::vector<int> descents = descent_positions(base);
  require(H.ne > (descents.empty() ? 0 : descents.back()),
          "join_by_hook: H's northeast position must exceed every descent");
  require(unsheltered.base == subsequence(base, 1, H.sw, H.ne + 1, base.size()),
          "join_by_hook: unsheltered part does not match the base");
  require(sheltered.base == subsequence(base, H.sw + 1, H.ne - 1, 1, 0),
          "join_by_hook: sheltered part does not match the base");

  HookConfig out;
  out.base = base;
  for (const Hook& hook : unsheltered.hooks) {
    Hook m = hook;
    if (m.ne > H.sw) m.ne = H.ne + (m.ne - H.sw);
    if (m.sw > H.sw) throw std::invalid_argument("join_by_hook: unsheltered hook out of range");
    out.hooks.push_back(m);
  }
  out.hooks.push_back(H);
  for (const Hook& hook : sheltered.hooks)
    out.hooks.push_back(Hook{hook.sw + H.sw, hook.ne + H.sw});
  std::sort(out.hooks.begin(), out.hooks.end());
  require(is_valid_vhc(out), "join_by_hook: parts do not assemble into a valid configuration");
  return out;
}

HookConfig transport_config(const HookConfig& h, const Permutation& new_base) {
  if (normalize(h.base) != normalize(new_base))
    throw std::invalid_argument("transport_config: bases are not order-isomorphic");
  return HookConfig{new_base, h.hooks};
}

}  // namespace stacksort
