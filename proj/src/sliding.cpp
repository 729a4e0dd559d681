#include "stacksort/sliding.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "stacksort/stats.hpp"

namespace stacksort {

namespace {

const Permutation& pat231() {
  static const Permutation p(std::vector<int>{2, 3, 1});
  return p;
}
const Permutation& pat132() {
  static const Permutation p(std::vector<int>{1, 3, 2});
  return p;
}
const Permutation& pat312() {
  static const Permutation p(std::vector<int>{3, 1, 2});
  return p;
}
const Permutation& pat3412() {
  static const Permutation p(std::vector<int>{3, 4, 1, 2});
  return p;
}

// p normalized and 231-avoiding.
std::vector<int> swu_rec(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  if (n == 0) return {};
  int m = 0;
  for (int i = 1; i < n; ++i)
    if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(m)]) m = i;
  // Entries before the maximum are exactly {1..m}; entries after normalize
  // by subtracting m.
  std::vector<int> left(p.begin(), p.begin() + m);
  std::vector<int> right;
  right.reserve(static_cast<std::size_t>(n - m - 1));
  for (int i = m + 1; i < n; ++i) right.push_back(p[static_cast<std::size_t>(i)] - m);
  std::vector<int> sl = swu_rec(left);
  std::vector<int> sr = swu_rec(right);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  const int lift = n - m - 1;
  for (int v : sl) out.push_back(v + lift);
  out.push_back(n);
  for (int v : sr) out.push_back(v);
  return out;
}

// p normalized and 132-avoiding.
std::vector<int> swu_inv_rec(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  if (n == 0) return {};
  int m = 0;
  for (int i = 1; i < n; ++i)
    if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(m)]) m = i;
  // Entries before the maximum are the top m values; entries after are {1..n-m-1}.
  std::vector<int> left;
  left.reserve(static_cast<std::size_t>(m));
  const int drop = n - m - 1;
  for (int i = 0; i < m; ++i) left.push_back(p[static_cast<std::size_t>(i)] - drop);
  std::vector<int> right(p.begin() + m + 1, p.end());
  std::vector<int> sl = swu_inv_rec(left);
  std::vector<int> sr = swu_inv_rec(right);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int v : sl) out.push_back(v);
  out.push_back(n);
  for (int v : sr) out.push_back(v + m);
  return out;
}

Permutation apply_normalized(const Permutation& p, const Permutation& forbidden,
                             std::vector<int> (*rec)(const std::vector<int>&),
                             const char* name) {
  Permutation nu = normalize(p);
  if (contains(nu, forbidden))
    throw std::invalid_argument(std::string(name) + ": input contains the forbidden pattern");
  Permutation image(rec(nu.entries()));
  return unnormalize(image, p.entries());
}

}  // namespace

Permutation swu(const Permutation& p) {
  return apply_normalized(p, pat231(), &swu_rec, "swu");
}

Permutation swu_inv(const Permutation& p) {
  return apply_normalized(p, pat132(), &swu_inv_rec, "swu_inv");
}

Permutation swl(const Permutation& p) {
  Permutation nu = normalize(p);
  if (contains(nu, pat132()))
    throw std::invalid_argument("swl: input contains the forbidden pattern");
  Permutation image = rot_inv(swu(rot(nu)));
  return unnormalize(image, p.entries());
}

Permutation swl_inv(const Permutation& p) {
  Permutation nu = normalize(p);
  if (contains(nu, pat312()))
    throw std::invalid_argument("swl_inv: input contains the forbidden pattern");
  Permutation image = rot_inv(swu_inv(rot(nu)));
  return unnormalize(image, p.entries());
}

bool swu_class_image(const std::vector<Permutation>& patterns, int n) {
  bool has231 = false;
  std::vector<Permutation> others;
  for (const Permutation& pat : patterns) {
    if (pat == pat231()) has231 = true;
    else others.push_back(pat);
  }
  if (!has231) throw std::invalid_argument("swu_class_image: pattern list must include 231");
  std::vector<Permutation> target_pats{pat132()};
  for (const Permutation& pat : others) target_pats.push_back(swu(pat));

  std::vector<Permutation> image;
  for (const Permutation& p : enumerate_av(n, patterns)) image.push_back(swu(p));
  std::sort(image.begin(), image.end());
  std::vector<Permutation> target = enumerate_av(n, target_pats);
  return image == target;
}

namespace {

void expect(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(std::string("theta invariant failed: ") + msg);
}

std::string memo_key(const Permutation& p, const std::vector<Hook>& hooks) {
  std::string key = p.str();
  for (const Hook& h : hooks) {
    key += ';';
    key += std::to_string(h.sw);
    key += ',';
    key += std::to_string(h.ne);
  }
  return key;
}

Permutation subseq(const Permutation& p, int lo1, int hi1, int lo2 = 1, int hi2 = 0) {
  std::vector<int> out;
  for (int i = lo1; i <= hi1; ++i) out.push_back(p.value_at(i));
  for (int i = lo2; i <= hi2; ++i) out.push_back(p.value_at(i));
  return Permutation(std::move(out));
}

HookConfig theta_impl(const Permutation& p, const HookConfig& h);

// p normalized, avoiding 132 and 3412, with p != swl(p).
std::vector<Hook> theta_norm(const Permutation& p, const std::vector<Hook>& hooks) {
  thread_local std::unordered_map<std::string, std::vector<Hook>> memo;
  const std::string key = memo_key(p, hooks);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const Permutation image = swl(p);
  const int n = p.size();
  const int a = n - tail_length(p);
  expect(3 <= a && a <= n - 1, "sliding fixed point has no anchor");
  const int b = p.value_at(a);
  std::vector<Hook> result;

  if (b == 1) {
    // Every configuration hooks the descent at a-1 to a tail fixed point.
    auto it = std::find_if(hooks.begin(), hooks.end(),
                           [&](const Hook& x) { return x.sw == a - 1; });
    expect(it != hooks.end(), "missing hook at the anchor descent");
    const Hook H = *it;
    expect(H.ne >= a + 1 && p.value_at(H.ne) == H.ne, "anchor hook must end in the tail");
    auto [hu, hs] = split_by_hook(HookConfig{p, hooks}, H);
    HookConfig hu2 = theta_impl(hu.base, hu);
    HookConfig hs2 = theta_impl(hs.base, hs);
    expect(hu2.base == subseq(image, 1, a - 1, H.ne + 1, n),
           "image of the unsheltered part is misaligned");
    expect(hs2.base == subseq(image, a, H.ne - 1), "image of the sheltered part is misaligned");
    result = join_by_hook(image, H, hu2, hs2).hooks;
  } else {
    // p = (decreasing block over (mu + 1)) + identity tail; the anchor
    // descent sits at a-b and hooks into the tail.
    auto it = std::find_if(hooks.begin(), hooks.end(),
                           [&](const Hook& x) { return x.sw == a - b; });
    expect(it != hooks.end(), "missing hook at the anchor descent");
    const Hook H = *it;
    expect(p.value_at(a - b) == b + 1, "unexpected shape at the anchor");
    const int l = H.ne - a;
    expect(1 <= l && l <= n - a && p.value_at(H.ne) == H.ne, "anchor hook must end in the tail");
    auto [hu, hs] = split_by_hook(HookConfig{p, hooks}, H);
    HookConfig ru = theta_impl(hu.base, hu);  // on swl(unsheltered part)
    HookConfig rs = theta_impl(hs.base, hs);  // on swl(sheltered part)
    const Hook H2{b, n + 1 - l};
    expect(image.value_at(b) == a && image.value_at(n + 1 - l) == n + 1 - l,
           "image anchor hook is misplaced");
    Permutation u2 = subseq(image, 1, b, n + 2 - l, n);
    Permutation s2 = subseq(image, b + 1, n - l);
    // The split parts swap roles between p and its image.
    HookConfig psi1 = transport_config(ru, s2);
    HookConfig psi2 = transport_config(rs, u2);
    result = join_by_hook(image, H2, psi2, psi1).hooks;
  }
  memo.emplace(key, result);
  return result;
}

HookConfig theta_impl(const Permutation& p, const HookConfig& h) {
  const Permutation nu = normalize(p);
  const Permutation image = swl(p);
  if (nu == swl(nu)) return HookConfig{image, h.hooks};
  std::vector<Hook> hooks = theta_norm(nu, h.hooks);
  return HookConfig{image, std::move(hooks)};
}

}  // namespace

HookConfig theta(const Permutation& p, const HookConfig& h) {
  Permutation nu = normalize(p);
  if (contains(nu, pat132()) || contains(nu, pat3412()))
    throw std::invalid_argument("theta: permutation must avoid 132 and 3412");
  if (h.base != p) throw std::invalid_argument("theta: configuration base mismatch");
  if (!is_valid_vhc(h)) throw std::invalid_argument("theta: configuration is not valid");
  HookConfig out = theta_impl(p, h);
  if (!is_valid_vhc(out)) throw std::logic_error("theta produced an invalid configuration");
  return out;
}

}  // namespace stacksort
