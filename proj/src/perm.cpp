#include "stacksort/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace stacksort {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  std::unordered_set<int> seen;
  for (int v : entries_) {
    require(v >= 1, "permutation entries must be positive");
    require(seen.insert(v).second, "permutation entries must be distinct");
  }
}

Permutation Permutation::identity(int n) {
  require(n >= 0, "length must be nonnegative");
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

Permutation Permutation::decreasing(int n) {
  require(n >= 0, "length must be nonnegative");
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
  std::string s(text);
  std::istringstream in(s);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  if (tokens.empty()) throw std::invalid_argument("empty permutation text (use \"e\")");
  if (tokens.size() == 1) {
    const std::string& t = tokens.front();
    if (t == "e") return Permutation();
    for (char c : t)
      require(std::isdigit(static_cast<unsigned char>(c)) != 0,
              "permutation text must be digits, spaces, or \"e\"");
    std::vector<int> e;
    e.reserve(t.size());
    for (char c : t) e.push_back(c - '0');
    return Permutation(std::move(e));
  }
  std::vector<int> e;
  e.reserve(tokens.size());
  for (const std::string& t : tokens) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(t, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad permutation entry: " + t);
    }
    require(pos == t.size(), "bad permutation entry");
    e.push_back(v);
  }
  return Permutation(std::move(e));
}

bool Permutation::is_normalized() const {
  const int n = size();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : entries_) {
    if (v > n) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (int v = 1; v <= n; ++v)
    if (!seen[static_cast<std::size_t>(v)]) return false;
  return true;
}

std::string Permutation::str() const {
  if (entries_.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(entries_[i]);
  }
  return out;
}

std::string Permutation::compact_str() const {
  if (entries_.empty()) return "e";
  bool digits = std::all_of(entries_.begin(), entries_.end(), [](int v) { return v <= 9; });
  if (!digits) return str();
  std::string out;
  for (int v : entries_) out += static_cast<char>('0' + v);
  return out;
}

Permutation normalize(const Permutation& p) {
  std::vector<int> sorted = p.entries();
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  out.reserve(sorted.size());
  for (int v : p.entries()) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    out.push_back(static_cast<int>(it - sorted.begin()) + 1);
  }
  return Permutation(std::move(out));
}

Permutation unnormalize(const Permutation& q, std::vector<int> labels) {
  require(q.is_normalized(), "unnormalize expects a normalized permutation");
  require(static_cast<int>(labels.size()) == q.size(), "label count must match length");
  std::sort(labels.begin(), labels.end());
  std::vector<int> out;
  out.reserve(labels.size());
  for (int v : q.entries()) out.push_back(labels[static_cast<std::size_t>(v - 1)]);
  return Permutation(std::move(out));
}

namespace {

bool contains_dfs(const std::vector<int>& p, const std::vector<int>& pat,
                  std::vector<int>& chosen, std::size_t t, std::size_t start) {
  const std::size_t n = p.size(), k = pat.size();
  if (t == k) return true;
  for (std::size_t j = start; j + (k - t) <= n; ++j) {
    bool ok = true;
    for (std::size_t s = 0; s < t; ++s) {
      const bool order_p = p[j] > p[static_cast<std::size_t>(chosen[s])];
      const bool order_pat = pat[t] > pat[s];
      if (order_p != order_pat) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen[t] = static_cast<int>(j);
    if (contains_dfs(p, pat, chosen, t + 1, j + 1)) return true;
  }
  return false;
}

}  // namespace

bool contains(const Permutation& p, const Permutation& pattern) {
  require(pattern.is_normalized(), "pattern must be normalized");
  const std::size_t n = p.entries().size(), k = pattern.entries().size();
  if (k == 0) return true;
  if (k > n) return false;
  std::vector<int> chosen(k, 0);
  return contains_dfs(p.entries(), pattern.entries(), chosen, 0, 0);
}

bool avoids_all(const Permutation& p, const std::vector<Permutation>& patterns) {
  for (const Permutation& pat : patterns)
    if (contains(p, pat)) return false;
  return true;
}

bool contains_cached(const Permutation& p, const Permutation& pattern) {
  thread_local std::unordered_map<std::string, bool> cache;
  std::string key = p.str();
  key += '|';
  key += pattern.str();
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  bool r = contains(p, pattern);
  cache.emplace(std::move(key), r);
  return r;
}

bool avoids_all_cached(const Permutation& p, const std::vector<Permutation>& patterns) {
  for (const Permutation& pat : patterns)
    if (contains_cached(p, pat)) return false;
  return true;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const std::vector<int>& e) { out.push_back(Permutation(e)); });
  return out;
}

void for_each_permutation(int n, const std::function<void(const std::vector<int>&)>& f) {
  require(n >= 0, "length must be nonnegative");
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  do {
    f(e);
  } while (std::next_permutation(e.begin(), e.end()));
}

std::vector<Permutation> enumerate_av(int n, const std::vector<Permutation>& patterns) {
  for (const Permutation& pat : patterns)
    require(pat.is_normalized(), "patterns must be normalized");
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const std::vector<int>& e) {
    Permutation p(e);
    if (avoids_all(p, patterns)) out.push_back(std::move(p));
  });
  return out;
}

std::vector<Permutation> containment_class(const std::vector<Permutation>& witnesses, int n) {
  for (const Permutation& w : witnesses)
    require(w.is_normalized(), "witnesses must be normalized");
  std::vector<Permutation> out;
  int max_len = 0;
  for (const Permutation& w : witnesses) max_len = std::max(max_len, w.size());
  if (n > max_len) return out;
  for_each_permutation(n, [&](const std::vector<int>& e) {
    Permutation p(e);
    for (const Permutation& w : witnesses) {
      if (contains(w, p)) {
        out.push_back(std::move(p));
        break;
      }
    }
  });
  return out;
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
  require(a.is_normalized() && b.is_normalized(), "operands must be normalized");
  std::vector<int> out = a.entries();
  out.reserve(static_cast<std::size_t>(a.size() + b.size()));
  for (int v : b.entries()) out.push_back(v + a.size());
  return Permutation(std::move(out));
}

Permutation skew_sum(const Permutation& a, const Permutation& b) {
  require(a.is_normalized() && b.is_normalized(), "operands must be normalized");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(a.size() + b.size()));
  for (int v : a.entries()) out.push_back(v + b.size());
  for (int v : b.entries()) out.push_back(v);
  return Permutation(std::move(out));
}

Permutation rot(const Permutation& p) {
  require(p.is_normalized(), "rot expects a normalized permutation");
  const int n = p.size();
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) inv[static_cast<std::size_t>(p.value_at(i) - 1)] = i;
  std::reverse(inv.begin(), inv.end());
  return Permutation(std::move(inv));
}

Permutation rot_inv(const Permutation& p) {
  require(p.is_normalized(), "rot_inv expects a normalized permutation");
  const int n = p.size();
  std::vector<int> rev = p.entries();
  std::reverse(rev.begin(), rev.end());
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(rev[static_cast<std::size_t>(i - 1)] - 1)] = i;
  return Permutation(std::move(out));
}

bool is_sum_indecomposable(const Permutation& p) {
  require(!p.empty(), "indecomposability is defined for nonempty permutations");
  require(p.is_normalized(), "expects a normalized permutation");
  int prefix_max = 0;
  for (int i = 1; i < p.size(); ++i) {
    prefix_max = std::max(prefix_max, p.value_at(i));
    if (prefix_max == i) return false;
  }
  return true;
}

bool is_skew_indecomposable(const Permutation& p) {
  require(!p.empty(), "indecomposability is defined for nonempty permutations");
  require(p.is_normalized(), "expects a normalized permutation");
  const int n = p.size();
  int prefix_min = n + 1;
  for (int i = 1; i < n; ++i) {
    prefix_min = std::min(prefix_min, p.value_at(i));
    if (prefix_min == n - i + 1) return false;
  }
  return true;
}

Permutation chi(int m, const Permutation& p) {
  require(m >= 0, "m must be nonnegative");
  require(p.is_normalized(), "chi expects a normalized permutation");
  const int n = p.size();
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n + m));
  const bool even = (m % 2 == 0);
  const int front_top = even ? n + m - 1 : n + m;
  const int back_top = even ? n + m : n + m - 1;
  for (int v = front_top; v >= n + 1; v -= 2) out.push_back(v);
  for (int v : p.entries()) out.push_back(v);
  for (int v = n + 2; v <= back_top; v += 2) out.push_back(v);
  return Permutation(std::move(out));
}

Permutation chi_tilde(int m, const Permutation& p) {
  return rot_inv(chi(m, rot(p)));
}

Permutation drop_last_star(const Permutation& p) {
  require(!p.empty(), "drop_last_star expects a nonempty permutation");
  std::vector<int> e = p.entries();
  e.pop_back();
  return normalize(Permutation(std::move(e)));
}

std::vector<Permutation> parse_pattern_list(std::string_view text) {
  std::vector<Permutation> out;
  std::string s(text);
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    bool blank = item.find_first_not_of(" \t") == std::string::npos;
    if (!blank) out.push_back(Permutation::parse(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string pattern_list_str(const std::vector<Permutation>& patterns) {
  std::string out;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    if (i) out += ',';
    out += patterns[i].compact_str();
  }
  return out;
}

std::size_t PermHash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.entries()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace stacksort
