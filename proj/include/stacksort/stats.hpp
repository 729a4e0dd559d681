#pragma once

#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "stacksort/perm.hpp"

namespace stacksort {

/// 1-based indices i with p_i > p_{i+1}. Depends only on relative order.
std::vector<int> descent_set(const Permutation& p);
int des(const Permutation& p);
/// Number of indices i in {2,...,n-1} with p_{i-1} < p_i > p_{i+1}.
int peak(const Permutation& p);
int lmax(const Permutation& p);
int rmax(const Permutation& p);
/// Largest m such that the m largest values appear in decreasing positional
/// order. Defined only for nonempty permutations.
int zeil(const Permutation& p);
/// Length of the maximal fixed-point suffix: smallest l >= 0 with
/// p_{n-l} != n-l (after normalization); the identity has tail length n.
int tail_length(const Permutation& p);

/// Canonical shape code of the decreasing binary plane tree whose in-order
/// reading is p: "_" for an empty slot, "(" left right ")" for a vertex.
std::string skeleton_of_perm(const Permutation& p);

using StatValue = std::variant<long long, std::vector<int>, std::string>;
std::string stat_value_str(const StatValue& v);

struct Statistic {
  std::string name;
  std::function<StatValue(const Permutation&)> eval;
};

/// Built-ins: des, peak, lmax, rmax, zeil, tl, desset, skeleton.
/// Throws on unknown names.
Statistic statistic_by_name(const std::string& name);
std::vector<Statistic> statistics_by_names(const std::vector<std::string>& names);

/// A user statistic depending only on (length, descent set).
Statistic lendes_statistic(std::string name,
                           std::function<long long(int, const std::vector<int>&)> f);

/// Multiset of statistic tuples over a permutation set. Rows are kept in
/// lexicographic order; two tables compare equal iff the multisets agree.
class DistributionTable {
public:
  DistributionTable() = default;
  DistributionTable(std::vector<std::string> columns,
                    std::map<std::vector<StatValue>, long long> rows, std::string source);

  const std::vector<std::string>& columns() const { return columns_; }
  const std::map<std::vector<StatValue>, long long>& rows() const { return rows_; }
  const std::string& source() const { return source_; }
  long long total() const;

  std::string to_csv() const;
  std::string to_json() const;

  friend bool operator==(const DistributionTable& a, const DistributionTable& b) {
    return a.rows_ == b.rows_;
  }

private:
  std::vector<std::string> columns_;
  std::map<std::vector<StatValue>, long long> rows_;
  std::string source_;
};

DistributionTable joint_distribution(const std::vector<Permutation>& perms,
                                     const std::vector<Statistic>& stats,
                                     std::string source = "");
DistributionTable joint_distribution(const std::vector<Permutation>& perms,
                                     const std::vector<std::string>& stat_names,
                                     std::string source = "");

}  // namespace stacksort
