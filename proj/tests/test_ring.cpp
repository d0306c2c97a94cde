#include <doctest.h>

#include "cartierlab/ring.hpp"

using namespace cartierlab;

namespace {

RingSpec Z() { return RingSpec::integers(); }
RingSpec Q() { return RingSpec::rationals(); }
RingSpec Zl() { return RingSpec::polynomial(RingSpec::integers(), "l"); }

RingValue zi(long v) { return RingValue::from_int(Z(), v); }

RingValue zpoly(std::vector<long> coeffs) {
  RingValue::PolyCoeffs c;
  for (long v : coeffs) c.push_back(zi(v));
  return RingValue::from_poly(Zl(), std::move(c));
}

}  // namespace

TEST_SUITE_BEGIN("ring");

TEST_CASE("integer and rational arithmetic") {
  CHECK(ring_eq(ring_add(zi(2), zi(3)), zi(5)));
  RingValue half = RingValue::from_rational(Q(), mpq_class(1, 2));
  RingValue two_thirds = RingValue::from_rational(Q(), mpq_class(2, 3));
  CHECK(ring_eq(ring_mul(half, two_thirds), RingValue::from_rational(Q(), mpq_class(1, 3))));
  CHECK(ring_is_unit(half));
  CHECK(!ring_is_unit(zi(2)));
  CHECK(ring_is_unit(zi(-1)));
}

TEST_CASE("residue arithmetic") {
  RingSpec z9 = RingSpec::integers_mod(9);
  // Residue oracle: plain integer arithmetic followed by reduction.
  mpz_class expected = (4 * 7) % 9;
  CHECK(ring_eq(ring_mul(RingValue::from_int(z9, 4), RingValue::from_int(z9, 7)),
                RingValue::from_int(z9, expected)));
  CHECK(ring_eq(RingValue::from_int(z9, -1), RingValue::from_int(z9, 8)));
  CHECK(ring_is_unit(RingValue::from_int(z9, 4)));
  CHECK(!ring_is_unit(RingValue::from_int(z9, 6)));
  CHECK(ring_eq(ring_mul(RingValue::from_int(z9, 4), ring_inv(RingValue::from_int(z9, 4))),
                RingValue::one(z9)));
}

TEST_CASE("spec mismatch is rejected") {
  CHECK_THROWS_AS(ring_add(zi(1), RingValue::from_int(Q(), 1)), Error);
  try {
    ring_add(zi(1), RingValue::from_int(Q(), 1));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SpecMismatch);
  }
}

TEST_CASE("polynomial derivative") {
  CHECK(ring_eq(poly_derivative(zpoly({2, 2})), zpoly({2})));
  CHECK(ring_eq(poly_derivative(zpoly({1, 4, 1})), zpoly({4, 2})));
  // Term-wise oracle: coefficient i of p' is (i+1) * coefficient i+1 of p.
  RingValue p = zpoly({70, 1120, 2520});
  RingValue expect = zpoly({1120, 5040});
  for (int i = 0; i <= poly_degree(expect); ++i)
    CHECK(ring_eq(poly_coeff(expect, i),
                  ring_mul(zi(i + 1), poly_coeff(p, i + 1))));
  CHECK(ring_eq(poly_derivative(p), expect));
  CHECK_THROWS_AS(poly_derivative(zi(3)), Error);
}

TEST_CASE("coefficient divisibility") {
  // 4*D applied to 2+2l, assembled with plain polynomial arithmetic:
  // 4(1-2l)*2 - (2+2l) = 6 - 18l.
  RingValue q = ring_sub(ring_mul(ring_mul(zpoly({4}), zpoly({1, -2})), zpoly({2})),
                         zpoly({2, 2}));
  CHECK(ring_eq(q, zpoly({6, -18})));
  CHECK(divides_all_coeffs(q, 3));
  CHECK(!divides_all_coeffs(q, 4));
  CHECK(divides_all_coeffs(zpoly({}), 17));
}

TEST_CASE("canonical forms") {
  // Fractions in lowest terms with positive denominator.
  mpq_class raw(-4, -6);
  RingValue v = RingValue::from_rational(Q(), raw);
  CHECK(v.as_mpq().get_num() == 2);
  CHECK(v.as_mpq().get_den() == 3);
  // No trailing zeros in polynomial payloads.
  RingValue p = ring_sub(zpoly({1, 2, 3}), zpoly({0, 0, 3}));
  CHECK(poly_degree(p) == 1);
  // Residues in [0, m).
  RingSpec z7 = RingSpec::integers_mod(7);
  CHECK(RingValue::from_int(z7, 23).as_mpz() == 2);
}

TEST_CASE("canonicalization is idempotent") {
  RingSpec z9 = RingSpec::integers_mod(9);
  RingValue r = RingValue::from_int(z9, -13);
  CHECK(ring_eq(RingValue::make_canonical(z9, r.as_mpz()), r));
  RingValue q = RingValue::from_rational(RingSpec::rationals(), mpq_class(6, -9));
  CHECK(ring_eq(RingValue::make_canonical(RingSpec::rationals(), q.as_mpq()), q));
  RingValue p = zpoly({1, 0, 2});
  CHECK(ring_eq(RingValue::make_canonical(Zl(), p.poly_coeffs()), p));
}

TEST_CASE("nested polynomial rings and generators") {
  RingSpec zc1 = RingSpec::polynomial(Z(), "c1");
  RingSpec zc12 = RingSpec::polynomial(zc1, "c2");
  RingValue c1 = RingValue::generator(zc12, "c1");
  RingValue c2 = RingValue::generator(zc12, "c2");
  RingValue prod = ring_mul(c1, c2);
  CHECK(poly_degree(prod) == 1);
  CHECK(ring_eq(ring_mul(prod, prod), ring_mul(ring_pow(c1, 2), ring_pow(c2, 2))));
  CHECK_THROWS_AS(RingSpec::polynomial(zc12, "c3"), Error);  // depth cap
}

TEST_CASE("ring spec grammar") {
  CHECK(RingSpec::parse("Z") == Z());
  CHECK(RingSpec::parse("Q") == Q());
  CHECK(RingSpec::parse("Z/9") == RingSpec::integers_mod(9));
  CHECK(RingSpec::parse("Q[l]") == RingSpec::polynomial(Q(), "l"));
  CHECK(RingSpec::parse("Z[c1][c2]") ==
        RingSpec::polynomial(RingSpec::polynomial(Z(), "c1"), "c2"));
  CHECK(RingSpec::parse("Z/9").to_string() == "Z/9");
  CHECK(RingSpec::parse("Z[c1][c2]").to_string() == "Z[c1][c2]");
  CHECK_THROWS_AS(RingSpec::parse("Z/1"), Error);
  CHECK_THROWS_AS(RingSpec::parse("R"), Error);
}

TEST_CASE("value literal parsing") {
  CHECK(ring_eq(parse_ring_value(Q(), " -7/14 "),
                RingValue::from_rational(Q(), mpq_class(-1, 2))));
  CHECK(ring_eq(parse_ring_value(Zl(), "l"), RingValue::generator(Zl(), "l")));
  CHECK_THROWS_AS(parse_ring_value(Q(), "1/0"), Error);
  CHECK_THROWS_AS(parse_ring_value(Q(), ""), Error);
  CHECK_THROWS_AS(parse_ring_value(Q(), "x"), Error);
  CHECK_THROWS_AS(parse_ring_value(Q(), "1.5"), Error);
}

TEST_CASE("ring maps") {
  RingSpec z12 = RingSpec::integers_mod(12);
  CHECK(ring_eq(ring_map(zi(25), z12), RingValue::from_int(z12, 1)));
  // Q -> Z/5: 1/2 becomes 3.
  RingSpec z5 = RingSpec::integers_mod(5);
  CHECK(ring_eq(ring_map(RingValue::from_rational(Q(), mpq_class(1, 2)), z5),
                RingValue::from_int(z5, 3)));
  CHECK_THROWS_AS(ring_map(RingValue::from_rational(Q(), mpq_class(1, 5)), z5), Error);
  // Evaluate l at 1 over Z/3.
  RingSpec z3 = RingSpec::integers_mod(3);
  RingValue p = zpoly({2, 2});
  RingValue image = ring_map(p, z3, {{"l", RingValue::from_int(z3, 1)}});
  CHECK(ring_eq(image, RingValue::from_int(z3, 1)));
}

TEST_CASE("division by integers") {
  CHECK(ring_eq(ring_div_int(zi(12), 4), zi(3)));
  CHECK_THROWS_AS(ring_div_int(zi(13), 4), Error);
  RingSpec z9 = RingSpec::integers_mod(9);
  CHECK(ring_eq(ring_div_int(RingValue::from_int(z9, 5), 2),
                RingValue::from_int(z9, 7)));  // 2*7 = 14 = 5 mod 9
  CHECK_THROWS_AS(ring_div_int(RingValue::from_int(z9, 5), 3), Error);
}

TEST_SUITE_END();
