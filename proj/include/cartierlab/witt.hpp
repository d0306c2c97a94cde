#ifndef CARTIERLAB_WITT_HPP
#define CARTIERLAB_WITT_HPP

#include <optional>
#include <vector>

#include "cartierlab/series.hpp"

namespace cartierlab {

/// Element of W_[1,k](R) in series coordinates: the power series
/// 1 + b_1 x + ... + b_k x^k, stored as the dense coefficient list b.
struct WittVector {
  RingSpec spec;
  int k = 0;
  std::vector<RingValue> b;  // b.size() == k

  static WittVector zero(const RingSpec& spec, int k);  // the series 1
  static WittVector from_coeffs(RingSpec spec, std::vector<RingValue> b);
  TruncatedSeries series(const std::string& var = "x") const;
};

bool witt_eq(const WittVector& a, const WittVector& b);
WittVector witt_truncate(const WittVector& a, int k2);

/// Group law: multiplication of the underlying series.
WittVector witt_add(const WittVector& a, const WittVector& b);
WittVector witt_neg(const WittVector& a);
WittVector witt_sub(const WittVector& a, const WittVector& b);
/// n-fold witt_add (n may be negative).
WittVector witt_smul(long n, const WittVector& a);

/// Ghost components w_1..w_k, the coefficients of -x f'(x)/f(x).
std::vector<RingValue> ghost(const WittVector& a);

/// Inverse of ghost where the reconstruction divisions are exact; throws
/// NotTorsionFree otherwise (use the universal polynomials instead).
WittVector from_ghost(const std::vector<RingValue>& w, const RingSpec& spec);

/// Ring product: ghost components multiply componentwise. Ghost path over
/// torsion-free rings, universal integer polynomials otherwise.
WittVector witt_mul(const WittVector& a, const WittVector& b);

/// Teichmueller lift [c] = 1 - c x (padded with zeros to length k).
WittVector teichmuller(const RingValue& c, int k);
/// Multiplication by [c]: b_i -> c^i b_i.
WittVector teich_scale(const RingValue& c, const WittVector& a);

/// V_n: x -> x^n on series; output truncation defaults to n*k.
WittVector verschiebung(long n, const WittVector& a, std::optional<int> k_out = std::nullopt);

/// F_n: ghost(F_n a)_m = ghost(a)_{nm}; output truncation floor(k/n).
WittVector frobenius(long n, const WittVector& a);

enum class UniversalOp { Add, Mul, Frobenius };

/// Universal integer polynomial family for an operation at input length k:
/// polynomials over Q in generic coefficients a_1..a_k (and c_1..c_k for
/// add/mul) whose integrality is verified on derivation. Results are
/// memoized; k is checked against the configured ceiling.
const std::vector<TruncatedSeries>& universal_polynomials(UniversalOp op, long frob_n, int k);

int universal_ceiling();
void set_universal_ceiling(int k);

}  // namespace cartierlab

#endif
