// Truncated formal power series over exact rationals, plus the
// generating-function constructions and residual checks built on them.
//
// Truncation contract: binary operations truncate to the smaller input
// order; derivative and divide_by_s lower the order by one.
#pragma once

#include <vector>

#include "treecount/numeric.hpp"
#include "treecount/recurrence.hpp"

namespace treecount {

class FormalSeries {
 public:
  // Zero series of the given truncation order (inclusive).
  explicit FormalSeries(long order);

  // Takes ownership of coeffs; coeffs.size() must equal order + 1.
  // Coefficients are canonicalized.
  FormalSeries(long order, std::vector<Rational> coeffs);

  long order() const { return static_cast<long>(coeff_.size()) - 1; }
  const Rational& operator[](long k) const { return coeff_.at(k); }
  Rational& operator[](long k) { return coeff_.at(k); }
  const std::vector<Rational>& coefficients() const { return coeff_; }

  bool is_zero() const;

  static FormalSeries variable(long order);                    // S
  static FormalSeries constant(const Rational& c, long order);

  friend bool operator==(const FormalSeries&, const FormalSeries&) = default;

 private:
  std::vector<Rational> coeff_;  // coeff_[k] = coefficient of S^k
};

FormalSeries operator+(const FormalSeries& a, const FormalSeries& b);
FormalSeries operator-(const FormalSeries& a, const FormalSeries& b);
FormalSeries operator-(const FormalSeries& a);
FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);

// First new_order + 1 coefficients; requires new_order <= a.order().
FormalSeries truncate(const FormalSeries& a, long new_order);

// Termwise derivative; requires order >= 1.
FormalSeries derivative(const FormalSeries& a);

// Shifts coefficients down one power; requires a[0] == 0 and order >= 1.
FormalSeries divide_by_s(const FormalSeries& a);

// exp(a) for a[0] == 0, solved coefficientwise from B' = A'B, b_0 = 1.
FormalSeries exp(const FormalSeries& a);

// log(a) for a[0] == 1, solved coefficientwise from A L' = A', l_0 = 0.
FormalSeries log(const FormalSeries& a);

// The tree generating function sum_{n=1}^{order} T_n S^n / (n-1)!.
// Note the (n-1)! weight; the table must already cover 1..order.
FormalSeries tree_egf(long order, const TreeCountTable& table);

// Unique series T with T(0) = 0 solving T = S * phi(T), by the classical
// coefficient formula [S^n]T = (1/n) [x^(n-1)] phi(x)^n. Requires
// phi[0] != 0 and phi.order() >= order - 1.
FormalSeries lagrange_invert(const FormalSeries& phi, long order);

// t - S*exp(t), truncated to t.order(). Zero iff t solves T = S e^T.
FormalSeries functional_equation_residual(const FormalSeries& t);

// t - log(t/S), order t.order() - 1. Zero iff t solves T = ln(T/S).
FormalSeries log_form_residual(const FormalSeries& t);

// t*t' - t' + t/S, order t.order() - 1. Zero iff t solves the
// differentiated identity T T' = T' - T/S.
FormalSeries ode_residual(const FormalSeries& t);

// t^2 - sum_{n=1}^{order} 2 (n-1)/n * T_n S^n / (n-1)!. Zero when t is
// the tree generating function of matching order.
FormalSeries square_identity_residual(const FormalSeries& t,
                                      const TreeCountTable& table);

}  // namespace treecount
