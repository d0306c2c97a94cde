#include "cartierlab/legendre.hpp"

#include <chrono>

namespace cartierlab {

namespace {

const char* kVar = "l";

RingSpec q_poly() { return RingSpec::polynomial(RingSpec::rationals(), kVar); }
RingSpec z_poly() { return RingSpec::polynomial(RingSpec::integers(), kVar); }

mpz_class binom(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

// A_m(l) = sum_k binom(m,k)^2 l^k over Z[l].
RingValue square_binom_poly(long m) {
  RingSpec zp = z_poly();
  RingValue::PolyCoeffs coeffs;
  for (long k = 0; k <= m; ++k) {
    mpz_class c = binom(m, k);
    coeffs.push_back(RingValue::from_int(RingSpec::integers(), c * c));
  }
  return RingValue::from_poly(zp, std::move(coeffs));
}

}  // namespace

DiffOperator DiffOperator::make(std::vector<RingValue> coeffs) {
  if (coeffs.empty()) throw Error(ErrorKind::UsageError, "operator needs coefficients");
  DiffOperator D;
  D.order = static_cast<int>(coeffs.size()) - 1;
  if (ring_is_zero(coeffs.back()))
    throw Error(ErrorKind::UsageError, "leading operator coefficient is zero");
  D.coeffs = std::move(coeffs);
  return D;
}

DiffOperator picard_fuchs_legendre() {
  RingSpec qp = q_poly();
  RingValue l = RingValue::generator(qp, kVar);
  RingValue one = RingValue::one(qp);
  RingValue c0 = ring_neg(RingValue::from_rational(qp, mpq_class(1, 4)));
  RingValue c1 = ring_sub(one, ring_add(l, l));              // 1 - 2l
  RingValue c2 = ring_mul(l, ring_sub(one, l));              // l(1 - l)
  return DiffOperator::make({c0, c1, c2});
}

RingValue apply_operator(const DiffOperator& D, const RingValue& p) {
  if (p.spec() != D.coeffs[0].spec())
    throw Error(ErrorKind::SpecMismatch, "operator and polynomial live in different rings");
  RingValue acc = RingValue::zero(p.spec());
  RingValue der = p;
  for (int j = 0; j <= D.order; ++j) {
    acc = ring_add(acc, ring_mul(D.coeffs[j], der));
    if (j < D.order) der = poly_derivative(der);
  }
  return acc;
}

RingValue legendre_omega_coeff(long n) {
  if (n < 0 || n % 2 != 0) throw Error(ErrorKind::OddIndex, "n must be even, got " + std::to_string(n));
  RingValue a = square_binom_poly(n / 2);
  RingValue c = RingValue::from_int(z_poly(), binom(n, n / 2));
  return ring_mul(c, a);
}

TruncatedSeries legendre_omega_series(int N) {
  TruncatedSeries g(q_poly(), {"x"}, N);
  for (long n = 0; n <= N; n += 2)
    g.set_coeff({static_cast<int>(n)}, ring_map(legendre_omega_coeff(n), q_poly()));
  return g;
}

TruncatedSeries legendre_log(int N) {
  if (N < 1) throw Error(ErrorKind::UsageError, "log truncation must be >= 1");
  TruncatedSeries lg(q_poly(), {"x"}, N);
  for (long n = 0; n + 1 <= N; n += 2) {
    RingValue c = ring_map(legendre_omega_coeff(n), q_poly());
    lg.set_coeff({static_cast<int>(n + 1)}, ring_div_int(c, n + 1));
  }
  return lg;
}

FormalGroupLaw legendre_fgl(int N) { return fgl_from_log({legendre_log(N)}); }

CongruenceReport congruence_check(long n) {
  if (n < 2 || n % 2 != 0) throw Error(ErrorKind::OddIndex, "n must be even and >= 2");
  CongruenceReport rep;
  rep.n = n;
  rep.modulus = n + 1;
  // 4 D p = 4 l(1-l) p'' + 4 (1-2l) p' - p, exactly over Z[l].
  RingSpec zp = z_poly();
  RingValue p = legendre_omega_coeff(n);
  RingValue l = RingValue::generator(zp, kVar);
  RingValue one = RingValue::one(zp);
  RingValue four = RingValue::from_int(zp, 4);
  RingValue p1 = poly_derivative(p);
  RingValue p2 = poly_derivative(p1);
  RingValue q = ring_mul(ring_mul(four, ring_mul(l, ring_sub(one, l))), p2);
  q = ring_add(q, ring_mul(ring_mul(four, ring_sub(one, ring_add(l, l))), p1));
  q = ring_sub(q, p);
  rep.ok = divides_all_coeffs(q, rep.modulus);
  for (int i = 0; i <= poly_degree(q); ++i) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), poly_coeff(q, i).as_mpz().get_mpz_t(), rep.modulus.get_mpz_t());
    rep.reduced.push_back(r);
  }
  return rep;
}

CentralBinomReport central_binom_congruence(long n) {
  if (n < 0 || n % 2 != 0) throw Error(ErrorKind::OddIndex, "n must be even");
  CentralBinomReport rep;
  rep.n = n;
  rep.modulus = n + 1;
  mpz_class b = binom(n, n / 2);
  mpz_mod(rep.value_mod.get_mpz_t(), b.get_mpz_t(), rep.modulus.get_mpz_t());
  rep.is_pm_one = rep.value_mod == 1 || rep.value_mod == rep.modulus - 1 || rep.modulus == 1;
  rep.modulus_prime = mpz_probab_prime_p(rep.modulus.get_mpz_t(), 40) > 0;
  return rep;
}

TruncatedSeries hypergeom_half(int N) {
  RingSpec q = RingSpec::rationals();
  TruncatedSeries f(q, {kVar}, N);
  for (long m = 0; m <= N; ++m) {
    mpz_class b = binom(2 * m, m);
    mpz_class sixteen_m;
    mpz_ui_pow_ui(sixteen_m.get_mpz_t(), 16, static_cast<unsigned long>(m));
    mpq_class c(b * b, sixteen_m);
    c.canonicalize();
    f.set_coeff({static_cast<int>(m)}, RingValue::from_rational(q, c));
  }
  return f;
}

SweepReport stienstra_sweep(long max_n) {
  auto t0 = std::chrono::steady_clock::now();
  SweepReport rep;
  rep.max_n = max_n;
  for (long n = 2; n <= max_n; n += 2) {
    rep.checks.push_back(congruence_check(n));
    rep.ok = rep.ok && rep.checks.back().ok;
  }
  auto t1 = std::chrono::steady_clock::now();
  rep.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rep;
}

}  // namespace cartierlab
