#include "cartierlab/nilpotent.hpp"

#include <functional>

namespace cartierlab {

namespace {

bool same_algebra(const NilpotentAlgebra& a, const NilpotentAlgebra& b) {
  if (a.spec != b.spec || a.rank != b.rank || a.exponent != b.exponent) return false;
  for (int i = 0; i < a.rank; ++i)
    for (int j = 0; j < a.rank; ++j)
      for (int k = 0; k < a.rank; ++k)
        if (!ring_eq(a.tensor[i][j][k], b.tensor[i][j][k])) return false;
  return true;
}

AlgebraElement basis(const NilpotentAlgebra& alg, int i) {
  AlgebraElement e(alg.rank, RingValue::zero(alg.spec));
  e[i] = RingValue::one(alg.spec);
  return e;
}

}  // namespace

void NilpotentAlgebra::validate() const {
  if (rank < 1 || exponent < 1) throw Error(ErrorKind::UsageError, "bad algebra shape");
  if (tensor.size() != static_cast<size_t>(rank))
    throw Error(ErrorKind::UsageError, "tensor shape");
  for (const auto& row : tensor) {
    if (row.size() != static_cast<size_t>(rank)) throw Error(ErrorKind::UsageError, "tensor shape");
    for (const auto& cell : row)
      if (cell.size() != static_cast<size_t>(rank))
        throw Error(ErrorKind::UsageError, "tensor shape");
  }
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (!algebra_eq(*this, algebra_mul(*this, basis(*this, i), basis(*this, j)),
                      algebra_mul(*this, basis(*this, j), basis(*this, i))))
        throw Error(ErrorKind::UsageError, "structure tensor is not commutative");
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      for (int k = 0; k < rank; ++k) {
        AlgebraElement lhs = algebra_mul(
            *this, algebra_mul(*this, basis(*this, i), basis(*this, j)), basis(*this, k));
        AlgebraElement rhs = algebra_mul(
            *this, basis(*this, i), algebra_mul(*this, basis(*this, j), basis(*this, k)));
        if (!algebra_eq(*this, lhs, rhs))
          throw Error(ErrorKind::UsageError, "structure tensor is not associative");
      }
  // All exponent-fold basis products vanish; by commutativity it is enough
  // to check nondecreasing index sequences.
  std::function<void(AlgebraElement, int, int)> walk = [&](AlgebraElement acc, int depth,
                                                           int from) {
    if (depth == exponent) {
      if (!algebra_is_zero(*this, acc))
        throw Error(ErrorKind::UsageError, "algebra is not nilpotent at the stated exponent");
      return;
    }
    for (int i = from; i < rank; ++i) walk(algebra_mul(*this, acc, basis(*this, i)), depth + 1, i);
  };
  for (int i = 0; i < rank; ++i) walk(basis(*this, i), 1, i);
}

AlgebraElement algebra_zero(const NilpotentAlgebra& alg) {
  return AlgebraElement(alg.rank, RingValue::zero(alg.spec));
}

AlgebraElement algebra_add(const NilpotentAlgebra& alg, const AlgebraElement& a,
                           const AlgebraElement& b) {
  AlgebraElement out(alg.rank, RingValue::zero(alg.spec));
  for (int i = 0; i < alg.rank; ++i) out[i] = ring_add(a[i], b[i]);
  return out;
}

AlgebraElement algebra_neg(const NilpotentAlgebra& alg, const AlgebraElement& a) {
  AlgebraElement out(alg.rank, RingValue::zero(alg.spec));
  for (int i = 0; i < alg.rank; ++i) out[i] = ring_neg(a[i]);
  return out;
}

AlgebraElement algebra_mul(const NilpotentAlgebra& alg, const AlgebraElement& a,
                           const AlgebraElement& b) {
  AlgebraElement out(alg.rank, RingValue::zero(alg.spec));
  for (int i = 0; i < alg.rank; ++i) {
    if (ring_is_zero(a[i])) continue;
    for (int j = 0; j < alg.rank; ++j) {
      if (ring_is_zero(b[j])) continue;
      RingValue prod = ring_mul(a[i], b[j]);
      for (int k = 0; k < alg.rank; ++k)
        out[k] = ring_add(out[k], ring_mul(prod, alg.tensor[i][j][k]));
    }
  }
  return out;
}

bool algebra_is_zero(const NilpotentAlgebra& alg, const AlgebraElement& a) {
  for (int i = 0; i < alg.rank; ++i)
    if (!ring_is_zero(a[i])) return false;
  return true;
}

bool algebra_eq(const NilpotentAlgebra& alg, const AlgebraElement& a, const AlgebraElement& b) {
  for (int i = 0; i < alg.rank; ++i)
    if (!ring_eq(a[i], b[i])) return false;
  return true;
}

LambdaElement LambdaElement::one(std::shared_ptr<const NilpotentAlgebra> algebra) {
  LambdaElement u;
  u.algebra = std::move(algebra);
  return u;
}

LambdaElement LambdaElement::make(std::shared_ptr<const NilpotentAlgebra> algebra,
                                  std::vector<AlgebraElement> coeffs) {
  LambdaElement u;
  u.algebra = std::move(algebra);
  u.coeffs = std::move(coeffs);
  while (!u.coeffs.empty() && algebra_is_zero(*u.algebra, u.coeffs.back())) u.coeffs.pop_back();
  return u;
}

namespace {

void require_same_algebra(const LambdaElement& u, const LambdaElement& v) {
  if (!same_algebra(*u.algebra, *v.algebra))
    throw Error(ErrorKind::AlgebraMismatch, "lambda elements over different algebras");
}

}  // namespace

LambdaElement lambda_mul(const LambdaElement& u, const LambdaElement& v) {
  require_same_algebra(u, v);
  const NilpotentAlgebra& alg = *u.algebra;
  size_t deg = u.coeffs.size() + v.coeffs.size();
  std::vector<AlgebraElement> out(deg, algebra_zero(alg));
  // (1 + A)(1 + B) = 1 + A + B + AB.
  for (size_t i = 0; i < u.coeffs.size(); ++i) out[i] = algebra_add(alg, out[i], u.coeffs[i]);
  for (size_t j = 0; j < v.coeffs.size(); ++j) out[j] = algebra_add(alg, out[j], v.coeffs[j]);
  for (size_t i = 0; i < u.coeffs.size(); ++i)
    for (size_t j = 0; j < v.coeffs.size(); ++j)
      out[i + j + 1] =
          algebra_add(alg, out[i + j + 1], algebra_mul(alg, u.coeffs[i], v.coeffs[j]));
  return LambdaElement::make(u.algebra, std::move(out));
}

namespace {

// Product of unitless polynomials with algebra coefficients; entry i stands
// for the t^(i+1) coefficient.
std::vector<AlgebraElement> tail_mul(const NilpotentAlgebra& alg,
                                     const std::vector<AlgebraElement>& a,
                                     const std::vector<AlgebraElement>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<AlgebraElement> out(a.size() + b.size(), algebra_zero(alg));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j + 1] = algebra_add(alg, out[i + j + 1], algebra_mul(alg, a[i], b[j]));
  return out;
}

}  // namespace

LambdaElement lambda_inv(const LambdaElement& u) {
  const NilpotentAlgebra& alg = *u.algebra;
  // (1 + A)^{-1} = 1 + sum_{j=1}^{e-1} (-A)^j; the series terminates because
  // A^e has coefficients in N^e = 0.
  std::vector<AlgebraElement> neg_a;
  neg_a.reserve(u.coeffs.size());
  for (const AlgebraElement& a : u.coeffs) neg_a.push_back(algebra_neg(alg, a));
  std::vector<AlgebraElement> sum, power = neg_a;
  for (int j = 1; j < alg.exponent && !power.empty(); ++j) {
    if (sum.size() < power.size()) sum.resize(power.size(), algebra_zero(alg));
    for (size_t i = 0; i < power.size(); ++i) sum[i] = algebra_add(alg, sum[i], power[i]);
    power = tail_mul(alg, power, neg_a);
  }
  return LambdaElement::make(u.algebra, std::move(sum));
}

bool lambda_eq(const LambdaElement& u, const LambdaElement& v) {
  require_same_algebra(u, v);
  if (u.coeffs.size() != v.coeffs.size()) return false;
  for (size_t i = 0; i < u.coeffs.size(); ++i)
    if (!algebra_eq(*u.algebra, u.coeffs[i], v.coeffs[i])) return false;
  return true;
}

}  // namespace cartierlab
