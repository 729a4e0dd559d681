#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "stacksort/perm.hpp"
#include "stacksort/stats.hpp"
#include "stacksort/trees.hpp"

namespace stacksort {

struct VerificationReport {
  std::string claim;
  bool pass = false;
  nlohmann::json witness;  // null on pass; a re-checkable counterexample on fail
  double ms = 0.0;

  std::string status() const { return pass ? "pass" : "fail"; }
  nlohmann::json to_json() const;
};

/// A permutation class given either by forbidden patterns or by containment
/// witnesses.
struct ClassSpec {
  enum class Kind { avoidance, containment };
  Kind kind = Kind::avoidance;
  std::vector<Permutation> patterns;

  static ClassSpec av(std::vector<Permutation> patterns);
  static ClassSpec contained_in(std::vector<Permutation> witnesses);

  std::vector<Permutation> members(int n) const;
  bool member(const Permutation& p) const;  // memoized pattern checks
  std::string str() const;
};

/// Members of S_n whose image under the stack-sorting map lies in the class.
std::vector<Permutation> class_preimage_members(const ClassSpec& c, int n);
long long class_preimage_count(const ClassSpec& c, int n);

/// Equality of preimage counts for every n <= n_max.
VerificationReport check_fertility_wilf(const ClassSpec& a, const ClassSpec& b, int n_max);

/// Equality, for every n <= n_max, of the multisets of configuration types
/// over the valid hook configurations of the two classes' length-n members.
VerificationReport check_strong_fertility_wilf(const ClassSpec& a, const ClassSpec& b, int n_max);

/// Equality of per-skeleton tree counts over the postorder preimages of the
/// two classes, for every requested family and every n <= n_max.
VerificationReport check_postorder_wilf(const ClassSpec& a, const ClassSpec& b, int n_max,
                                        const std::vector<std::pair<TreeFamily, int>>& families);

/// Equality of joint statistic distributions over the stack-sorting
/// preimages of the two classes for every 1 <= n <= n_max.
VerificationReport check_joint_distribution(const ClassSpec& a, const ClassSpec& b,
                                            const std::vector<std::string>& stats, int n_max);

/// For every p in S_n (3 <= n <= n_max) and every admissible (a, b, c),
/// verifies that dropping the final entry induces the three classified
/// bijections between preimage sets filtered by (zeil, des, peak) and
/// end-of-word descents.
VerificationReport check_zeil_recursion(int n_max);

/// Coefficients, for n = 1..n_max, of (1 - 2x - sqrt(1 - 4x - 4x^2)) / (4x),
/// expanded exactly as a formal power series.
std::vector<long long> boolean_catalan_sequence(int n_max);

/// Pattern pools: chi_m applied to {1, 12, 1423, 2143} and chi_tilde_m
/// applied to {1, 21, 4213}, for m = 0..m_max.
std::vector<Permutation> family_A(int m_max);
std::vector<Permutation> family_B(int m_max);

struct RunConfig {
  int n_max = 0;  // 0 keeps each claim's pinned bound
  int m_max = 3;
};

/// Registered claims, in presentation order.
std::vector<std::string> all_claim_ids();
/// The twelve acceptance criteria, in order.
std::vector<std::string> acceptance_claim_ids();
VerificationReport run_claim(const std::string& id, const RunConfig& cfg = {});

}  // namespace stacksort
