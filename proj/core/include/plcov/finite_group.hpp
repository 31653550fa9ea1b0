#ifndef PLCOV_FINITE_GROUP_HPP
#define PLCOV_FINITE_GROUP_HPP

#include <string>
#include <vector>

#include "plcov/base.hpp"

namespace plcov {

/// A finite group as a validated multiplication table.  Elements are
/// indices 0..n-1 with identity 0; mul(a, b) means "a then b", matching the
/// right-action convention used by coset tables and monodromy throughout.
class FiniteGroup {
 public:
  static FiniteGroup cyclic(int m);
  static FiniteGroup symmetric(int n);  // n <= 6
  /// Closure of permutation generators on 0..degree-1; elements ordered by
  /// lexicographic permutation image, so the numbering is input-order
  /// independent.
  static FiniteGroup from_permutations(int degree,
                                       const std::vector<std::vector<int>>& gens,
                                       std::string label = "perm-group");
  /// Validates identity/inverses/associativity/closure.
  static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                std::string label = "table-group");

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const {
    return table_[static_cast<size_t>(a)][static_cast<size_t>(b)];
  }
  int inv(int a) const { return inverse_[static_cast<size_t>(a)]; }
  static constexpr int identity() { return 0; }

  const std::string& label() const { return label_; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  /// Permutation images when built from permutations (empty otherwise).
  const std::vector<std::vector<int>>& permutations() const { return perms_; }

  /// Sorted element list of the subgroup generated by `gens`.
  std::vector<int> subgroup_generated(const std::vector<int>& gens) const;
  int element_order(int a) const;

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> perms_;
  std::string label_;

  void finish_validate();
};

}  // namespace plcov

#endif  // PLCOV_FINITE_GROUP_HPP
