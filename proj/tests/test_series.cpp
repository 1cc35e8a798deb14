#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "treecount/series.hpp"

using treecount::FormalSeries;
using treecount::make_rational;
using treecount::Natural;
using treecount::Rational;
using treecount::to_string;
using treecount::TreeCountTable;

namespace {

FormalSeries from_longs(const std::vector<long>& values) {
  FormalSeries s(static_cast<long>(values.size()) - 1);
  for (std::size_t k = 0; k < values.size(); ++k)
    s[static_cast<long>(k)] = values[k];
  return s;
}

FormalSeries random_series(std::mt19937& rng, long order,
                           bool zero_constant) {
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 4);
  FormalSeries s(order);
  for (long k = 0; k <= order; ++k)
    s[k] = make_rational(num(rng), den(rng));
  if (zero_constant) s[0] = 0;
  return s;
}

}  // namespace

TEST_CASE("rational factory normalizes") {
  const Rational half = make_rational(2, 4);
  CHECK(half.get_num() == 1);
  CHECK(half.get_den() == 2);
  const Rational negative = make_rational(3, -6);
  CHECK(negative.get_num() == -1);
  CHECK(negative.get_den() == 2);
  const Rational zero = make_rational(0, 7);
  CHECK(zero.get_num() == 0);
  CHECK(zero.get_den() == 1);
  CHECK(to_string(make_rational(3, 2)) == "3/2");
  CHECK(to_string(make_rational(7, 1)) == "7");
  CHECK(to_string(negative) == "-1/2");
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("series construction") {
  const FormalSeries zero(4);
  CHECK(zero.order() == 4);
  CHECK(zero.is_zero());
  CHECK(FormalSeries::variable(3) == from_longs({0, 1, 0, 0}));
  CHECK(FormalSeries::constant(make_rational(5), 2) == from_longs({5, 0, 0}));
  CHECK_THROWS_AS(FormalSeries(-1), std::domain_error);
  CHECK_THROWS_AS(FormalSeries(2, {Rational(1), Rational(2)}),
                  std::domain_error);
  // Raw coefficients are canonicalized on the way in.
  const FormalSeries fixed(1, {Rational(0), Rational(2, 4)});
  CHECK(fixed[1].get_num() == 1);
  CHECK(fixed[1].get_den() == 2);
}

TEST_CASE("addition and subtraction") {
  CHECK(from_longs({1, 1}) + from_longs({1, -1}) == from_longs({2, 0}));
  const FormalSeries a = from_longs({3, -2, 5});
  CHECK(a + FormalSeries(2) == a);
  CHECK(from_longs({0, 1, 0}) + from_longs({0, 0, 1}) ==
        from_longs({0, 1, 1}));
  // Binary operations truncate to the smaller order.
  CHECK((FormalSeries(5) + FormalSeries(3)).order() == 3);
  CHECK((a - a).is_zero());
}

TEST_CASE("multiplication") {
  CHECK(from_longs({1, 1, 0}) * from_longs({1, -1, 0}) ==
        from_longs({1, 0, -1}));
  const FormalSeries a = from_longs({2, 0, -7, 1});
  CHECK(a * FormalSeries::constant(make_rational(1), 3) == a);
  // T = S + S^2 + (3/2)S^3: the square is S^2 + 2S^3 at order 3.
  FormalSeries t(3);
  t[1] = 1;
  t[2] = 1;
  t[3] = make_rational(3, 2);
  CHECK(t * t == from_longs({0, 0, 1, 2}));
  CHECK((from_longs({1, 1}) * a).order() == 1);
}

TEST_CASE("derivative") {
  CHECK(treecount::derivative(from_longs({0, 0, 1})) == from_longs({0, 2}));
  CHECK(treecount::derivative(from_longs({9, 0, 0})) == from_longs({0, 0}));
  FormalSeries a(2);
  a[1] = 1;
  a[2] = make_rational(1, 2);
  CHECK(treecount::derivative(a) == from_longs({1, 1}));
  CHECK_THROWS_AS(treecount::derivative(FormalSeries(0)), std::domain_error);
}

TEST_CASE("division by S") {
  CHECK(treecount::divide_by_s(from_longs({0, 1, 1})) == from_longs({1, 1}));
  CHECK(treecount::divide_by_s(from_longs({0, 1})) == from_longs({1}));
  CHECK_THROWS_AS(treecount::divide_by_s(from_longs({1, 1})),
                  std::domain_error);
}

TEST_CASE("series exponential") {
  CHECK(treecount::exp(FormalSeries(3)) == from_longs({1, 0, 0, 0}));
  const FormalSeries e = treecount::exp(FormalSeries::variable(4));
  CHECK(e[0] == 1);
  CHECK(e[1] == 1);
  CHECK(e[2] == make_rational(1, 2));
  CHECK(e[3] == make_rational(1, 6));
  CHECK(e[4] == make_rational(1, 24));
  const FormalSeries g = treecount::exp(from_longs({0, 1, 1}));
  CHECK(g[2] == make_rational(3, 2));
  CHECK_THROWS_AS(treecount::exp(from_longs({1, 1})), std::domain_error);
}

TEST_CASE("series logarithm") {
  CHECK(treecount::log(from_longs({1, 0, 0})).is_zero());
  const FormalSeries l = treecount::log(from_longs({1, 1, 0, 0}));
  CHECK(l[1] == 1);
  CHECK(l[2] == make_rational(-1, 2));
  CHECK(l[3] == make_rational(1, 3));
  const FormalSeries a = from_longs({0, 1, 2, 0, 0});
  CHECK(treecount::log(treecount::exp(a)) == a);
  CHECK_THROWS_AS(treecount::log(from_longs({2, 1})), std::domain_error);
  CHECK_THROWS_AS(treecount::log(from_longs({0, 1})), std::domain_error);
}

TEST_CASE("exp and log invert each other on random series") {
  std::mt19937 rng(20240901);
  for (int trial = 0; trial < 100; ++trial) {
    const FormalSeries a = random_series(rng, 20, true);
    CHECK(treecount::log(treecount::exp(a)) == a);
    const FormalSeries one_plus_a =
        FormalSeries::constant(make_rational(1), 20) + a;
    CHECK(treecount::exp(treecount::log(one_plus_a)) == one_plus_a);
  }
}

TEST_CASE("product is commutative and associative at matched orders") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const FormalSeries a = random_series(rng, 12, false);
    const FormalSeries b = random_series(rng, 12, false);
    const FormalSeries c = random_series(rng, 12, false);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("derivative is linear and satisfies the Leibniz rule") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const FormalSeries a = random_series(rng, 12, false);
    const FormalSeries b = random_series(rng, 12, false);
    CHECK(treecount::derivative(a + b) ==
          treecount::derivative(a) + treecount::derivative(b));
    CHECK(treecount::derivative(a * b) ==
          treecount::derivative(a) * b + a * treecount::derivative(b));
  }
}

TEST_CASE("tree generating function coefficients") {
  TreeCountTable table(10);
  CHECK(treecount::tree_egf(2, table) == from_longs({0, 1, 1}));
  const FormalSeries t3 = treecount::tree_egf(3, table);
  CHECK(t3[3] == make_rational(3, 2));
  const FormalSeries t4 = treecount::tree_egf(4, table);
  CHECK(t4[4] == make_rational(8, 3));
  CHECK(t4[0] == 0);
  CHECK_THROWS_AS(treecount::tree_egf(0, table), std::domain_error);
  TreeCountTable small(2);
  CHECK_THROWS_AS(treecount::tree_egf(5, small), std::domain_error);
}

TEST_CASE("lagrange inversion of the exponential") {
  const FormalSeries phi = treecount::exp(FormalSeries::variable(3));
  const FormalSeries t = treecount::lagrange_invert(phi, 4);
  CHECK(t[0] == 0);
  CHECK(t[1] == 1);
  CHECK(t[2] == 1);
  CHECK(t[3] == make_rational(3, 2));
  CHECK(t[4] == make_rational(8, 3));
}

TEST_CASE("lagrange inversion of a constant is the identity") {
  for (long order : {1L, 3L, 7L}) {
    const FormalSeries phi =
        FormalSeries::constant(make_rational(1), order - 1);
    CHECK(treecount::lagrange_invert(phi, order) ==
          FormalSeries::variable(order));
  }
}

TEST_CASE("lagrange inversion of 1 + x") {
  // T = S(1 + T) solves to S/(1 - S): every coefficient is 1.
  const FormalSeries phi = from_longs({1, 1, 0});
  const FormalSeries t = treecount::lagrange_invert(phi, 3);
  CHECK(t == from_longs({0, 1, 1, 1}));
  // Back-substitution: T - S(1 + T) vanishes.
  const FormalSeries s = FormalSeries::variable(3);
  const FormalSeries one_plus_t =
      FormalSeries::constant(make_rational(1), 3) + t;
  CHECK((t - s * one_plus_t).is_zero());
}

TEST_CASE("lagrange inversion of the geometric series gives Catalan numbers") {
  // phi = 1/(1-x) truncated; T = S/(1-T), i.e. T - T^2 = S.
  FormalSeries phi(5);
  for (long k = 0; k <= 5; ++k) phi[k] = 1;
  const FormalSeries t = treecount::lagrange_invert(phi, 6);
  CHECK(t == from_longs({0, 1, 1, 2, 5, 14, 42}));
  CHECK(t - t * t == FormalSeries::variable(6));
}

TEST_CASE("lagrange inversion rejects bad inputs") {
  CHECK_THROWS_AS(treecount::lagrange_invert(from_longs({0, 1}), 2),
                  std::domain_error);
  CHECK_THROWS_AS(treecount::lagrange_invert(from_longs({1, 1}), 5),
                  std::domain_error);
  CHECK_THROWS_AS(treecount::lagrange_invert(from_longs({1, 1}), 0),
                  std::domain_error);
}

TEST_CASE("lagrange back-substitution residual vanishes at order 30") {
  const long order = 30;
  const FormalSeries s = FormalSeries::variable(order);
  const FormalSeries exp_phi =
      treecount::exp(FormalSeries::variable(order - 1));
  const FormalSeries t_exp = treecount::lagrange_invert(exp_phi, order);
  CHECK((t_exp - s * treecount::exp(t_exp)).is_zero());

  const FormalSeries affine_phi =
      FormalSeries::constant(make_rational(1), order - 1) +
      FormalSeries::variable(order - 1);
  const FormalSeries t_affine = treecount::lagrange_invert(affine_phi, order);
  const FormalSeries one_plus =
      FormalSeries::constant(make_rational(1), order) + t_affine;
  CHECK((t_affine - s * one_plus).is_zero());
}

TEST_CASE("lagrange coefficients match the tree series and n^(n-1)/n!") {
  TreeCountTable table(20);
  const FormalSeries t = treecount::tree_egf(20, table);
  const FormalSeries phi = treecount::exp(FormalSeries::variable(19));
  const FormalSeries inverted = treecount::lagrange_invert(phi, 20);
  Natural factorial = 1;
  for (long n = 1; n <= 20; ++n) {
    factorial *= n;
    Natural power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(n - 1));
    CHECK(inverted[n] == t[n]);
    CHECK(inverted[n] == make_rational(power, factorial));
  }
}

TEST_CASE("all four residuals vanish on the tree series at every order") {
  TreeCountTable table(50);
  for (long order = 1; order <= 50; ++order) {
    const FormalSeries t = treecount::tree_egf(order, table);
    CHECK(treecount::square_identity_residual(t, table).is_zero());
    CHECK(treecount::log_form_residual(t).is_zero());
    CHECK(treecount::ode_residual(t).is_zero());
    CHECK(treecount::functional_equation_residual(t).is_zero());
  }
}

TEST_CASE("residuals flag non-solutions") {
  CHECK_FALSE(
      treecount::functional_equation_residual(FormalSeries::variable(3))
          .is_zero());
  CHECK_FALSE(treecount::log_form_residual(from_longs({0, 1, 2})).is_zero());
  CHECK_FALSE(treecount::ode_residual(from_longs({0, 0, 1})).is_zero());
  CHECK(treecount::ode_residual(FormalSeries(4)).is_zero());
  TreeCountTable table(3);
  CHECK_FALSE(
      treecount::square_identity_residual(FormalSeries::variable(3), table)
          .is_zero());
}

TEST_CASE("log-form residual of S alone is zero at order 1") {
  const FormalSeries r =
      treecount::log_form_residual(FormalSeries::variable(1));
  CHECK(r.order() == 0);
  CHECK(r.is_zero());
}

TEST_CASE("truncate") {
  const FormalSeries a = from_longs({4, 3, 2, 1});
  CHECK(treecount::truncate(a, 1) == from_longs({4, 3}));
  CHECK(treecount::truncate(a, 3) == a);
  CHECK_THROWS_AS(treecount::truncate(a, 4), std::domain_error);
  CHECK_THROWS_AS(treecount::truncate(a, -1), std::domain_error);
}
