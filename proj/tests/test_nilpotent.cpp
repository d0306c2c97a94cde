#include <doctest.h>

#include "cartierlab/nilpotent.hpp"

using namespace cartierlab;

namespace {

// Square-zero algebra of the given rank: all products vanish.
std::shared_ptr<const NilpotentAlgebra> square_zero(const RingSpec& spec, int rank) {
  NilpotentAlgebra alg;
  alg.spec = spec;
  alg.rank = rank;
  alg.exponent = 2;
  alg.tensor.assign(rank, std::vector<std::vector<RingValue>>(
                              rank, std::vector<RingValue>(rank, RingValue::zero(spec))));
  alg.validate();
  return std::make_shared<NilpotentAlgebra>(std::move(alg));
}

// e1*e1 = e2, all else zero; cube zero.
std::shared_ptr<const NilpotentAlgebra> dual_cubic(const RingSpec& spec) {
  NilpotentAlgebra alg;
  alg.spec = spec;
  alg.rank = 2;
  alg.exponent = 3;
  alg.tensor.assign(2, std::vector<std::vector<RingValue>>(
                           2, std::vector<RingValue>(2, RingValue::zero(spec))));
  alg.tensor[0][0][1] = RingValue::one(spec);
  alg.validate();
  return std::make_shared<NilpotentAlgebra>(std::move(alg));
}

}  // namespace

TEST_SUITE_BEGIN("nilpotent");

TEST_CASE("algebra validation") {
  RingSpec z = RingSpec::integers();
  CHECK_NOTHROW(square_zero(z, 3));
  CHECK_NOTHROW(dual_cubic(z));
  // A non-nilpotent tensor (e1*e1 = e1) is rejected.
  NilpotentAlgebra bad;
  bad.spec = z;
  bad.rank = 1;
  bad.exponent = 3;
  bad.tensor.assign(1, {{{RingValue::one(z)}}});
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("square-zero products") {
  RingSpec z = RingSpec::integers();
  auto alg = square_zero(z, 1);
  // (1 + n t)(1 - n t) = 1 when n^2 = 0.
  LambdaElement u = LambdaElement::make(alg, {{RingValue::from_int(z, 5)}});
  LambdaElement v = LambdaElement::make(alg, {{RingValue::from_int(z, -5)}});
  CHECK(lambda_eq(lambda_mul(u, v), LambdaElement::one(alg)));
  CHECK(lambda_eq(lambda_mul(u, LambdaElement::one(alg)), u));
}

TEST_CASE("inverse terminates by nilpotency") {
  RingSpec z = RingSpec::integers();
  // n^3 = 0: inv(1 + n t) = 1 - n t + n^2 t^2 with n = e1, n^2 = e2.
  auto alg = dual_cubic(z);
  LambdaElement u = LambdaElement::make(
      alg, {{RingValue::one(z), RingValue::zero(z)}});
  LambdaElement inv = lambda_inv(u);
  REQUIRE(inv.coeffs.size() == 2);
  CHECK(ring_eq(inv.coeffs[0][0], RingValue::from_int(z, -1)));
  CHECK(ring_is_zero(inv.coeffs[0][1]));
  CHECK(ring_is_zero(inv.coeffs[1][0]));
  CHECK(ring_eq(inv.coeffs[1][1], RingValue::one(z)));
  CHECK(lambda_eq(lambda_mul(u, inv), LambdaElement::one(alg)));
  CHECK(lambda_eq(lambda_mul(inv, u), LambdaElement::one(alg)));
}

TEST_CASE("group laws on random elements") {
  RingSpec z5 = RingSpec::integers_mod(5);
  auto alg = dual_cubic(z5);
  std::vector<LambdaElement> elems;
  for (long a = 0; a < 5; ++a)
    for (long b = 0; b < 5; ++b)
      elems.push_back(LambdaElement::make(
          alg, {{RingValue::from_int(z5, a), RingValue::from_int(z5, b)}}));
  for (const LambdaElement& u : elems) {
    CHECK(lambda_eq(lambda_mul(u, lambda_inv(u)), LambdaElement::one(alg)));
    for (const LambdaElement& v : elems) {
      CHECK(lambda_eq(lambda_mul(u, v), lambda_mul(v, u)));
      CHECK(lambda_eq(lambda_mul(lambda_mul(u, v), u), lambda_mul(u, lambda_mul(v, u))));
    }
  }
}

TEST_CASE("algebra mismatch") {
  RingSpec z = RingSpec::integers();
  LambdaElement u = LambdaElement::make(square_zero(z, 1), {{RingValue::one(z)}});
  LambdaElement v = LambdaElement::make(dual_cubic(z),
                                        {{RingValue::one(z), RingValue::zero(z)}});
  try {
    lambda_mul(u, v);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AlgebraMismatch);
  }
}

TEST_SUITE_END();
