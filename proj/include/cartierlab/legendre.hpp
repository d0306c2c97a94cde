#ifndef CARTIERLAB_LEGENDRE_HPP
#define CARTIERLAB_LEGENDRE_HPP

#include <string>
#include <vector>

#include "cartierlab/fgl.hpp"

namespace cartierlab {

/// Linear differential operator in d/dl with polynomial coefficients over
/// Q[l]: coeffs[j] multiplies the j-th derivative.
struct DiffOperator {
  int order = 0;
  std::vector<RingValue> coeffs;  // size order+1, over Q[l]

  static DiffOperator make(std::vector<RingValue> coeffs);
};

/// The Picard-Fuchs operator of the Legendre family:
/// D = l(1-l) (d/dl)^2 + (1-2l) d/dl - 1/4.
DiffOperator picard_fuchs_legendre();

/// Apply the operator exactly over Q[l].
RingValue apply_operator(const DiffOperator& D, const RingValue& p);

/// binom(n, n/2) * A_{n/2}(l) with A_m(l) = sum_k binom(m,k)^2 l^k, over Z[l];
/// the coefficient of x^n dx in the Legendre invariant form. n must be even.
RingValue legendre_omega_coeff(long n);

/// The form coefficient series g(x) = sum_n legendre_omega_coeff(n) x^n over
/// Q[l], truncated at N.
TruncatedSeries legendre_omega_series(int N);

/// Logarithm l(x) = sum binom(n,n/2) A_{n/2}(l) x^{n+1}/(n+1) over Q[l],
/// truncated at N (linear coefficient 1).
TruncatedSeries legendre_log(int N);

/// The Legendre formal group law over Q[l] at truncation N, reconstructed
/// from the logarithm.
FormalGroupLaw legendre_fgl(int N);

struct CongruenceReport {
  long n = 0;
  mpz_class modulus;                  // n + 1
  std::vector<mpz_class> reduced;     // 4*D(omega_n) coefficients mod n+1
  bool ok = false;
};

/// Check 4*D(binom(n,n/2) A_{n/2}) == 0 mod n+1, exactly in Z[l]. The factor
/// 4 clears the -1/4 term of D and is a unit mod the odd modulus n+1.
CongruenceReport congruence_check(long n);

struct CentralBinomReport {
  long n = 0;
  mpz_class modulus;    // n + 1
  mpz_class value_mod;  // binom(n, n/2) mod n+1
  bool is_pm_one = false;
  bool modulus_prime = false;
};

CentralBinomReport central_binom_congruence(long n);

/// 2F1(1/2, 1/2; 1; l) = sum binom(2m,m)^2 (l/16)^m over Q in l, trunc N.
TruncatedSeries hypergeom_half(int N);

struct SweepReport {
  long max_n = 0;
  bool ok = true;
  std::vector<CongruenceReport> checks;
  double wall_ms = 0;
};

/// congruence_check for every even 2 <= n <= max_n.
SweepReport stienstra_sweep(long max_n);

}  // namespace cartierlab

#endif
