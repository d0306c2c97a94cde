#ifndef CARTIERLAB_NILPOTENT_HPP
#define CARTIERLAB_NILPOTENT_HPP

#include <memory>
#include <vector>

#include "cartierlab/ring.hpp"

namespace cartierlab {

/// Nilpotent algebra without unit: a free module R^rank with a commutative,
/// associative multiplication tensor e_i e_j = sum_k tensor[i][j][k] e_k and
/// all `exponent`-fold products zero.
struct NilpotentAlgebra {
  RingSpec spec;
  int rank = 0;
  int exponent = 1;
  std::vector<std::vector<std::vector<RingValue>>> tensor;

  /// Checks commutativity, associativity, and nilpotency on basis monomials;
  /// throws UsageError when the structure constants violate them.
  void validate() const;
};

using AlgebraElement = std::vector<RingValue>;  // coordinates, length rank

AlgebraElement algebra_zero(const NilpotentAlgebra& alg);
AlgebraElement algebra_add(const NilpotentAlgebra& alg, const AlgebraElement& a,
                           const AlgebraElement& b);
AlgebraElement algebra_neg(const NilpotentAlgebra& alg, const AlgebraElement& a);
AlgebraElement algebra_mul(const NilpotentAlgebra& alg, const AlgebraElement& a,
                           const AlgebraElement& b);
bool algebra_is_zero(const NilpotentAlgebra& alg, const AlgebraElement& a);
bool algebra_eq(const NilpotentAlgebra& alg, const AlgebraElement& a, const AlgebraElement& b);

/// Element of Lambda(N): a polynomial 1 + n_1 t + ... + n_s t^s with
/// coefficients in the algebra (the leading 1 is implicit; trailing zero
/// coefficients are trimmed).
struct LambdaElement {
  std::shared_ptr<const NilpotentAlgebra> algebra;
  std::vector<AlgebraElement> coeffs;

  static LambdaElement one(std::shared_ptr<const NilpotentAlgebra> algebra);
  static LambdaElement make(std::shared_ptr<const NilpotentAlgebra> algebra,
                            std::vector<AlgebraElement> coeffs);
};

LambdaElement lambda_mul(const LambdaElement& u, const LambdaElement& v);
/// Group inverse; polynomial because the geometric series terminates at the
/// algebra's nilpotency exponent.
LambdaElement lambda_inv(const LambdaElement& u);
bool lambda_eq(const LambdaElement& u, const LambdaElement& v);

}  // namespace cartierlab

#endif
