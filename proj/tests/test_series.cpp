#include <doctest.h>

#include "cartierlab/series.hpp"
#include "oracles.hpp"

using namespace cartierlab;

namespace {

RingSpec Q() { return RingSpec::rationals(); }

TruncatedSeries univ(const oracle::QPoly& p, int trunc) {
  return oracle::to_series(Q(), p, trunc);
}

TruncatedSeries harmonic(int trunc) {
  // sum_{k>=1} x^k / k
  TruncatedSeries s(Q(), {"x"}, trunc);
  for (int k = 1; k <= trunc; ++k)
    s.set_coeff({k}, RingValue::from_rational(Q(), mpq_class(1, k)));
  return s;
}

}  // namespace

TEST_SUITE_BEGIN("series");

TEST_CASE("multiplication") {
  // Convolution oracle.
  oracle::QPoly expect = oracle::mul({1, -2}, {1, -3}, 2);
  CHECK(series_eq(series_mul(univ({1, -2}, 2), univ({1, -3}, 2)), univ(expect, 2)));
  CHECK(expect == oracle::QPoly{1, -5, 6});

  TruncatedSeries a = univ({0, 2, 0, 5}, 6);
  TruncatedSeries one = TruncatedSeries::constant(Q(), {"x"}, 6, RingValue::one(Q()));
  CHECK(series_eq(series_mul(a, one), a));

  // (x+y)(x-y) = x^2 - y^2 at total degree 2.
  TruncatedSeries x = TruncatedSeries::variable(Q(), {"x", "y"}, 2, 0);
  TruncatedSeries y = TruncatedSeries::variable(Q(), {"x", "y"}, 2, 1);
  TruncatedSeries got = series_mul(series_add(x, y), series_sub(x, y));
  TruncatedSeries want(Q(), {"x", "y"}, 2);
  want.set_coeff({2, 0}, RingValue::one(Q()));
  want.set_coeff({0, 2}, ring_neg(RingValue::one(Q())));
  CHECK(series_eq(got, want));
}

TEST_CASE("composition") {
  TruncatedSeries f = harmonic(4);
  TruncatedSeries xsq(Q(), {"x"}, 8);
  xsq.set_coeff({2}, RingValue::one(Q()));
  // Direct substitution oracle at degree 8.
  oracle::QPoly expect = oracle::compose(oracle::from_series(f), {0, 0, 1}, 8);
  CHECK(series_eq(series_compose(f, {xsq}), univ(expect, 8)));

  TruncatedSeries id = TruncatedSeries::variable(Q(), {"x"}, 4, 0);
  CHECK(series_eq(series_compose(f, {id}), f));

  // compose(x + y - x y, [u, 0]) = u  (unit section of the multiplicative law).
  TruncatedSeries law(Q(), {"x", "y"}, 6);
  law.set_coeff({1, 0}, RingValue::one(Q()));
  law.set_coeff({0, 1}, RingValue::one(Q()));
  law.set_coeff({1, 1}, ring_neg(RingValue::one(Q())));
  TruncatedSeries u = TruncatedSeries::variable(Q(), {"u"}, 6, 0);
  TruncatedSeries zero(Q(), {"u"}, 6);
  CHECK(series_eq(series_compose(law, {u, zero}), u));

  CHECK_THROWS_AS(series_compose(law, {u}), Error);  // arity
  TruncatedSeries bad = TruncatedSeries::constant(Q(), {"u"}, 6, RingValue::one(Q()));
  try {
    series_compose(law, {u, bad});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonzeroConstantTerm);
  }
}

TEST_CASE("inversion") {
  // Geometric series oracle.
  CHECK(series_eq(series_invert(univ({1, -1}, 3)), univ({1, 1, 1, 1}, 3)));
  CHECK(series_eq(series_invert(univ({1}, 5)),
                  TruncatedSeries::constant(Q(), {"x"}, 5, RingValue::one(Q()))));
  // Undetermined coefficients oracle.
  oracle::QPoly inv = oracle::invert({1, -1, -1}, 2);
  CHECK(inv == oracle::QPoly{1, 1, 2});
  CHECK(series_eq(series_invert(univ({1, -1, -1}, 2)), univ(inv, 2)));
  try {
    series_invert(univ({0, 1}, 3));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonUnitConstantTerm);
  }
  // Unit constant terms other than 1.
  TruncatedSeries f = univ({2, 3, -1, 5}, 5);
  TruncatedSeries one = TruncatedSeries::constant(Q(), {"x"}, 5, RingValue::one(Q()));
  CHECK(series_eq(series_mul(f, series_invert(f)), one));
  RingSpec z9 = RingSpec::integers_mod(9);
  TruncatedSeries g(z9, {"x"}, 4);
  g.set_coeff({0}, RingValue::from_int(z9, 2));
  g.set_coeff({1}, RingValue::from_int(z9, 3));
  g.set_coeff({3}, RingValue::from_int(z9, 7));
  CHECK(series_eq(series_mul(g, series_invert(g)),
                  TruncatedSeries::constant(z9, {"x"}, 4, RingValue::one(z9))));
}

TEST_CASE("reversion") {
  // rev(sum x^k/k) = x - x^2/2 + x^3/6 - x^4/24, cross-checked by Lagrange
  // inversion.
  TruncatedSeries f = harmonic(4);
  oracle::QPoly lag = oracle::lagrange_reversion(oracle::from_series(f), 4);
  CHECK(lag == oracle::QPoly{0, 1, mpq_class(-1, 2), mpq_class(1, 6), mpq_class(-1, 24)});
  CHECK(series_eq(series_reversion(f), univ(lag, 4)));

  TruncatedSeries id = TruncatedSeries::variable(Q(), {"x"}, 5, 0);
  CHECK(series_eq(series_reversion(id), id));

  oracle::QPoly lag2 = oracle::lagrange_reversion({0, 1, -1}, 3);
  CHECK(lag2 == oracle::QPoly{0, 1, 1, 2});
  CHECK(series_eq(series_reversion(univ({0, 1, -1}, 3)), univ(lag2, 3)));

  try {
    series_reversion(univ({0, 0, 1}, 3));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotReversible);
  }

  // Works over rings where the leading coefficient is merely a unit.
  RingSpec z9 = RingSpec::integers_mod(9);
  TruncatedSeries g(z9, {"x"}, 5);
  g.set_coeff({1}, RingValue::from_int(z9, 2));
  g.set_coeff({2}, RingValue::from_int(z9, 3));
  TruncatedSeries rev = series_reversion(g);
  TruncatedSeries xz = TruncatedSeries::variable(z9, {"x"}, 5, 0);
  CHECK(series_eq(series_compose(g, {rev}), xz));
  CHECK(series_eq(series_compose(rev, {g}), xz));
}

TEST_CASE("integration") {
  CHECK(series_eq(series_integrate(univ({1, 1, 1}, 2)),
                  univ({0, 1, mpq_class(1, 2), mpq_class(1, 3)}, 3)));
  // integral of the truncated geometric series is the harmonic series.
  TruncatedSeries geo = series_invert(univ({1, -1}, 5));
  CHECK(series_eq(series_integrate(geo), harmonic(6)));
  CHECK(series_eq(series_integrate(TruncatedSeries(Q(), {"x"}, 4)),
                  TruncatedSeries(Q(), {"x"}, 5)));
  // Over Z the divisions must be exact.
  RingSpec z = RingSpec::integers();
  TruncatedSeries ok(z, {"x"}, 3);
  ok.set_coeff({1}, RingValue::from_int(z, 2));
  CHECK(series_eq(series_integrate(ok), [&] {
    TruncatedSeries w(z, {"x"}, 4);
    w.set_coeff({2}, RingValue::from_int(z, 1));
    return w;
  }()));
  TruncatedSeries badz(z, {"x"}, 3);
  badz.set_coeff({1}, RingValue::from_int(z, 1));
  try {
    series_integrate(badz);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonInvertibleIndex);
  }
}

TEST_CASE("log1p and expm1") {
  // Term expansion oracle: log(1-x) = -sum x^k/k.
  TruncatedSeries mx(Q(), {"x"}, 6);
  mx.set_coeff({1}, ring_neg(RingValue::one(Q())));
  CHECK(series_eq(series_log1p(mx), series_neg(harmonic(6))));
  CHECK(series_eq(series_log1p(TruncatedSeries(Q(), {"x"}, 5)), TruncatedSeries(Q(), {"x"}, 5)));
  // Inverse-function oracle on a fixed series.
  TruncatedSeries u = univ({0, 1, mpq_class(3, 7), 0, 2}, 7);
  CHECK(series_eq(series_expm1(series_log1p(u)), u));
  CHECK(series_eq(series_log1p(series_expm1(u)), u));
}

TEST_CASE("truncation coherence") {
  TruncatedSeries f = harmonic(9);
  TruncatedSeries g = univ({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, 9);
  CHECK(series_eq(series_truncate(series_mul(f, g), 6),
                  series_mul(series_truncate(f, 6), series_truncate(g, 6))));
  CHECK(series_eq(series_truncate(series_compose(f, {g}), 6),
                  series_compose(series_truncate(f, 6), {series_truncate(g, 6)})));
  CHECK(series_eq(series_truncate(series_invert(series_add(
                      TruncatedSeries::constant(Q(), {"x"}, 9, RingValue::one(Q())), g)), 6),
                  series_invert(series_add(
                      TruncatedSeries::constant(Q(), {"x"}, 6, RingValue::one(Q())),
                      series_truncate(g, 6)))));
  CHECK(series_eq(series_truncate(series_reversion(f), 6),
                  series_reversion(series_truncate(f, 6))));
  CHECK(series_eq(series_truncate(series_integrate(f), 6),
                  series_integrate(series_truncate(f, 5))));
  CHECK(series_eq(series_truncate(series_log1p(g), 6),
                  series_log1p(series_truncate(g, 6))));
}

TEST_CASE("graded-lex term order") {
  TruncatedSeries s(Q(), {"x", "y"}, 3);
  s.set_coeff({0, 2}, RingValue::one(Q()));
  s.set_coeff({1, 1}, RingValue::one(Q()));
  s.set_coeff({2, 0}, RingValue::one(Q()));
  s.set_coeff({0, 1}, RingValue::one(Q()));
  s.set_coeff({1, 0}, RingValue::one(Q()));
  std::vector<Exponents> order;
  for (const auto& [e, c] : s.terms()) order.push_back(e);
  CHECK(order == std::vector<Exponents>{{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}});
}

TEST_SUITE_END();
