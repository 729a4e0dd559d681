#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace stacksort {

/// A permutation of a finite set of distinct positive integers, written in
/// one-line notation. The empty permutation is a valid value. A permutation
/// of {1,...,n} is called normalized.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);
  static Permutation decreasing(int n);

  /// Parses "3 1 2" (space-separated entries), the compact digit form "312"
  /// (single token, one digit per entry), or the literal "e" for the empty
  /// permutation.
  static Permutation parse(std::string_view text);

  const std::vector<int>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }

  /// Entry at 1-based position.
  int value_at(int pos) const { return entries_[static_cast<std::size_t>(pos - 1)]; }

  bool is_normalized() const;

  /// Canonical text form: space-separated entries, "e" when empty.
  std::string str() const;
  /// Digit form when every entry is a single digit, canonical form otherwise.
  std::string compact_str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> entries_;
};

/// Replaces the i-th smallest entry with i.
Permutation normalize(const Permutation& p);

/// Relabels the normalized permutation q with the given label set (the i-th
/// smallest label replaces entry i). `labels` need not be sorted.
Permutation unnormalize(const Permutation& q, std::vector<int> labels);

/// True iff some subsequence of p has the same relative order as `pattern`.
/// The pattern must be normalized.
bool contains(const Permutation& p, const Permutation& pattern);
bool avoids_all(const Permutation& p, const std::vector<Permutation>& patterns);

/// Memoized variants backed by a per-thread cache; intended for the large
/// class sweeps, where the same (permutation, pattern) query recurs.
bool contains_cached(const Permutation& p, const Permutation& pattern);
bool avoids_all_cached(const Permutation& p, const std::vector<Permutation>& patterns);

/// S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Calls f(entries) for every element of S_n in lexicographic order.
void for_each_permutation(int n, const std::function<void(const std::vector<int>&)>& f);

/// All normalized length-n permutations avoiding every pattern in the list.
/// An empty list denotes no restriction. Deterministic (lexicographic) order.
std::vector<Permutation> enumerate_av(int n, const std::vector<Permutation>& patterns);

/// All p in S_n contained in at least one witness.
std::vector<Permutation> containment_class(const std::vector<Permutation>& witnesses, int n);

Permutation direct_sum(const Permutation& a, const Permutation& b);
Permutation skew_sum(const Permutation& a, const Permutation& b);

/// Counterclockwise quarter-turn of the plot: the reverse of the inverse.
Permutation rot(const Permutation& p);
Permutation rot_inv(const Permutation& p);

bool is_sum_indecomposable(const Permutation& p);
bool is_skew_indecomposable(const Permutation& p);

/// Wraps p in m extra entries: a decreasing run of large values in front and
/// an increasing run behind, interleaved by parity. chi(0, p) = p.
Permutation chi(int m, const Permutation& p);
/// rot-conjugate of chi: rot_inv(chi(m, rot(p))).
Permutation chi_tilde(int m, const Permutation& p);

/// Normalization of p with its final entry removed. p must be nonempty.
Permutation drop_last_star(const Permutation& p);

/// Comma-separated permutations, e.g. "231,1423" or "3 1 2,21".
std::vector<Permutation> parse_pattern_list(std::string_view text);
std::string pattern_list_str(const std::vector<Permutation>& patterns);

struct PermHash {
  std::size_t operator()(const Permutation& p) const;
};

}  // namespace stacksort
