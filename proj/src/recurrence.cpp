#include "treecount/recurrence.hpp"

#include <algorithm>
#include <stdexcept>

namespace treecount {

void TreeCountTable::extend(long max_n) {
  if (max_n < 1) throw std::domain_error("TreeCountTable: max_n must be >= 1");
  for (long m = this->max_n() + 1; m <= max_n; ++m) {
    Natural sum = 0;
    for (long k = 0; k <= m - 2; ++k)
      sum += binomial(m - 2, k) * values_[k] * values_[m - k - 2];
    Natural doubled = m * sum;
    // m * sum is even for every m >= 2; anything else is a broken table.
    if (mpz_odd_p(doubled.get_mpz_t()))
      throw std::logic_error("TreeCountTable: n * sum came out odd");
    values_.push_back(doubled / 2);
  }
}

const Natural& TreeCountTable::at(long n) const {
  if (n < 1 || n > max_n())
    throw std::out_of_range("TreeCountTable: index outside 1..max_n");
  return values_[n - 1];
}

void TreeCountTable::override_value(long n, Natural value) {
  if (n < 1 || n > max_n())
    throw std::out_of_range("TreeCountTable: index outside 1..max_n");
  values_[n - 1] = std::move(value);
}

Natural binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Natural result = 1;
  for (unsigned long i = 1; i <= k; ++i) {
    result *= n - k + i;
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), i);
  }
  return result;
}

Natural tree_count_recursive(long n, TreeCountTable& table) {
  if (n < 1) throw std::domain_error("tree_count_recursive: n must be >= 1");
  table.extend(n);
  return table.at(n);
}

Natural tree_count_closed(long n) {
  if (n < 1) throw std::domain_error("tree_count_closed: n must be >= 1");
  if (n <= 2) return 1;
  Natural result;
  mpz_ui_pow_ui(result.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(n - 2));
  return result;
}

Natural edge_rooted_count(long n, TreeCountTable& table) {
  if (n < 2) throw std::domain_error("edge_rooted_count: n must be >= 2");
  table.extend(n - 1);
  Natural sum = 0;
  for (long k = 0; k <= n - 2; ++k)
    sum += binomial(n - 2, k) * table.at(k + 1) * table.at(n - k - 1);
  return sum;
}

VerificationReport verify_edge_symmetry(long n, TreeCountTable& table) {
  if (n < 2) throw std::domain_error("verify_edge_symmetry: n must be >= 2");
  Natural lhs = n * edge_rooted_count(n, table);
  Natural rhs = 2 * tree_count_recursive(n, table);
  VerificationReport report;
  report.identity = "edge-symmetry";
  report.lo = report.hi = n;
  report.lhs = to_string(lhs);
  report.rhs = to_string(rhs);
  if (lhs != rhs) {
    report.passed = false;
    report.failure_index = n;
  }
  return report;
}

}  // namespace treecount
