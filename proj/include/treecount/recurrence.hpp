// Exact labeled-tree counts: memoized recurrence, closed form, and the
// edge-symmetry identity n * E_n == 2 * T_n relating them.
#pragma once

#include <vector>

#include "treecount/numeric.hpp"
#include "treecount/report.hpp"

namespace treecount {

// Memoized table of labeled-tree counts T_1..T_max, built from
//   T_n = (n/2) * sum_{k=0}^{n-2} C(n-2,k) * T_{k+1} * T_{n-k-1},  T_1 = 1.
// The product n * sum is computed first and halved after an exact
// evenness check, so the table never leaves integer arithmetic.
class TreeCountTable {
 public:
  TreeCountTable() { values_.emplace_back(1); }
  explicit TreeCountTable(long max_n) : TreeCountTable() { extend(max_n); }

  // Extends the table to cover 1..max_n; no-op if already covered.
  void extend(long max_n);

  long max_n() const { return static_cast<long>(values_.size()); }

  // T_n for 1 <= n <= max_n(). The reference is invalidated by extend().
  const Natural& at(long n) const;

  // Test hook: overwrites T_n in place, deliberately breaking the table
  // invariants so downstream verification failures can be exercised.
  void override_value(long n, Natural value);

 private:
  std::vector<Natural> values_;  // values_[i] = T_{i+1}
};

// C(n, k) by the multiplicative formula, dividing exactly at each step.
// Returns 0 when k > n.
Natural binomial(unsigned long n, unsigned long k);

// T_n via the recurrence; extends the table up to n as a side effect.
Natural tree_count_recursive(long n, TreeCountTable& table);

// n^(n-2); defined as 1 for n = 1 and n = 2.
Natural tree_count_closed(long n);

// E_n = sum_{k=0}^{n-2} C(n-2,k) * T_{k+1} * T_{n-k-1}, the number of
// trees containing one fixed edge. Requires n >= 2.
Natural edge_rooted_count(long n, TreeCountTable& table);

// Checks n * E_n == 2 * T_n exactly; the report carries both sides.
VerificationReport verify_edge_symmetry(long n, TreeCountTable& table);

}  // namespace treecount
