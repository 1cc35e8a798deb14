#include "treecount/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace treecount {

namespace {

long checked_order(long order) {
  if (order < 0) throw std::domain_error("FormalSeries: negative order");
  return order;
}

}  // namespace

FormalSeries::FormalSeries(long order) : coeff_(checked_order(order) + 1) {}

FormalSeries::FormalSeries(long order, std::vector<Rational> coeffs)
    : coeff_(std::move(coeffs)) {
  if (static_cast<long>(coeff_.size()) != checked_order(order) + 1)
    throw std::domain_error("FormalSeries: coefficient count != order + 1");
  for (Rational& c : coeff_) c.canonicalize();
}

bool FormalSeries::is_zero() const {
  return std::all_of(coeff_.begin(), coeff_.end(),
                     [](const Rational& c) { return c == 0; });
}

FormalSeries FormalSeries::variable(long order) {
  FormalSeries s(order);
  if (order >= 1) s[1] = 1;
  return s;
}

FormalSeries FormalSeries::constant(const Rational& c, long order) {
  FormalSeries s(order);
  s[0] = c;
  s[0].canonicalize();
  return s;
}

FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
  FormalSeries out(std::min(a.order(), b.order()));
  for (long k = 0; k <= out.order(); ++k) out[k] = a[k] + b[k];
  return out;
}

FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) {
  FormalSeries out(std::min(a.order(), b.order()));
  for (long k = 0; k <= out.order(); ++k) out[k] = a[k] - b[k];
  return out;
}

FormalSeries operator-(const FormalSeries& a) {
  FormalSeries out(a.order());
  for (long k = 0; k <= out.order(); ++k) out[k] = -a[k];
  return out;
}

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
  FormalSeries out(std::min(a.order(), b.order()));
  for (long k = 0; k <= out.order(); ++k) {
    Rational acc = 0;
    for (long i = 0; i <= k; ++i) acc += a[i] * b[k - i];
    out[k] = std::move(acc);
  }
  return out;
}

FormalSeries truncate(const FormalSeries& a, long new_order) {
  if (new_order < 0 || new_order > a.order())
    throw std::domain_error("truncate: new order outside 0..order");
  FormalSeries out(new_order);
  for (long k = 0; k <= new_order; ++k) out[k] = a[k];
  return out;
}

FormalSeries derivative(const FormalSeries& a) {
  if (a.order() < 1) throw std::domain_error("derivative: order 0 series");
  FormalSeries out(a.order() - 1);
  for (long k = 0; k <= out.order(); ++k) out[k] = (k + 1) * a[k + 1];
  return out;
}

FormalSeries divide_by_s(const FormalSeries& a) {
  if (a[0] != 0) throw std::domain_error("divide_by_s: nonzero constant term");
  if (a.order() < 1) throw std::domain_error("divide_by_s: order 0 series");
  FormalSeries out(a.order() - 1);
  for (long k = 0; k <= out.order(); ++k) out[k] = a[k + 1];
  return out;
}

FormalSeries exp(const FormalSeries& a) {
  if (a[0] != 0)
    throw std::domain_error("exp: constant term must be 0");
  FormalSeries b(a.order());
  b[0] = 1;
  // From B' = A'B:  n b_n = sum_{k=1}^{n} k a_k b_{n-k}.
  for (long n = 1; n <= a.order(); ++n) {
    Rational acc = 0;
    for (long k = 1; k <= n; ++k) acc += k * a[k] * b[n - k];
    b[n] = acc / n;
  }
  return b;
}

FormalSeries log(const FormalSeries& a) {
  if (a[0] != 1)
    throw std::domain_error("log: constant term must be 1");
  FormalSeries l(a.order());
  // From A L' = A':  n l_n = n a_n - sum_{k=1}^{n-1} k l_k a_{n-k}.
  for (long n = 1; n <= a.order(); ++n) {
    Rational acc = n * a[n];
    for (long k = 1; k < n; ++k) acc -= k * l[k] * a[n - k];
    l[n] = acc / n;
  }
  return l;
}

FormalSeries tree_egf(long order, const TreeCountTable& table) {
  if (order < 1) throw std::domain_error("tree_egf: order must be >= 1");
  if (table.max_n() < order)
    throw std::domain_error("tree_egf: table does not cover 1..order");
  FormalSeries t(order);
  Integer weight = 1;  // (n-1)!
  for (long n = 1; n <= order; ++n) {
    if (n >= 2) weight *= n - 1;
    t[n] = make_rational(table.at(n), weight);
  }
  return t;
}

FormalSeries lagrange_invert(const FormalSeries& phi, long order) {
  if (order < 1) throw std::domain_error("lagrange_invert: order must be >= 1");
  if (phi[0] == 0)
    throw std::domain_error("lagrange_invert: phi(0) must be nonzero");
  if (phi.order() < order - 1)
    throw std::domain_error("lagrange_invert: phi truncated below order - 1");
  const FormalSeries base = truncate(phi, order - 1);
  FormalSeries t(order);
  FormalSeries power = base;  // phi^n, truncated to order - 1
  t[1] = power[0];
  for (long n = 2; n <= order; ++n) {
    power = power * base;
    t[n] = power[n - 1] / n;
  }
  return t;
}

FormalSeries functional_equation_residual(const FormalSeries& t) {
  const FormalSeries e = exp(t);
  FormalSeries s_exp(t.order());  // S * exp(t), truncated to t.order()
  for (long k = 1; k <= t.order(); ++k) s_exp[k] = e[k - 1];
  return t - s_exp;
}

FormalSeries log_form_residual(const FormalSeries& t) {
  return t - log(divide_by_s(t));
}

FormalSeries ode_residual(const FormalSeries& t) {
  const FormalSeries dt = derivative(t);
  return t * dt - dt + divide_by_s(t);
}

FormalSeries square_identity_residual(const FormalSeries& t,
                                      const TreeCountTable& table) {
  const long order = t.order();
  if (order < 1)
    throw std::domain_error("square_identity_residual: order must be >= 1");
  if (table.max_n() < order)
    throw std::domain_error("square_identity_residual: table too small");
  FormalSeries rhs(order);
  Integer weight = 1;  // (n-1)!
  for (long n = 1; n <= order; ++n) {
    if (n >= 2) weight *= n - 1;
    // 2 (n-1)/n * T_n / (n-1)!; the n = 1 term vanishes.
    rhs[n] = make_rational(2 * (n - 1) * table.at(n), n * weight);
  }
  return t * t - rhs;
}

}  // namespace treecount
