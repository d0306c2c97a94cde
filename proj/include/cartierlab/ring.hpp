#ifndef CARTIERLAB_RING_HPP
#define CARTIERLAB_RING_HPP

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "cartierlab/error.hpp"

namespace cartierlab {

/// Description of a coefficient ring: Z, Q, Z/m, or a polynomial ring over
/// one of these. Polynomial nesting depth is capped at 2, which covers every
/// ring the library needs (e.g. Z[l], Q[l], Z[c1][c2]).
class RingSpec {
 public:
  enum class Kind { Integers, Rationals, IntegersMod, Polynomial };

  RingSpec() : kind_(Kind::Integers) {}

  static RingSpec integers();
  static RingSpec rationals();
  static RingSpec integers_mod(mpz_class m);  // m >= 2
  static RingSpec polynomial(RingSpec base, std::string var);

  /// Grammar: "Z" | "Q" | "Z/<m>" | "<base>[<var>]", e.g. "Z/9", "Q[l]".
  static RingSpec parse(const std::string& text);

  Kind kind() const { return kind_; }
  const mpz_class& modulus() const { return modulus_; }
  const RingSpec& base() const { return *base_; }
  const std::string& var() const { return var_; }

  std::string to_string() const;

  /// True for Z, Q and polynomial rings over them; false for Z/m.
  bool torsion_free() const;
  /// True when every nonzero integer is invertible (Q and rings over Q).
  bool contains_rationals() const;
  int poly_depth() const;

  bool operator==(const RingSpec& o) const;
  bool operator!=(const RingSpec& o) const { return !(*this == o); }

 private:
  RingSpec(Kind k) : kind_(k) {}
  Kind kind_;
  mpz_class modulus_;
  std::shared_ptr<const RingSpec> base_;
  std::string var_;
};

/// An exact element of a declared ring. Payloads are kept canonical:
/// rationals in lowest terms with positive denominator, residues in [0, m),
/// polynomial coefficient lists with no trailing zero (zero = empty list).
class RingValue {
 public:
  using PolyCoeffs = std::vector<RingValue>;

  RingValue() : spec_(RingSpec::integers()), payload_(mpz_class(0)) {}

  static RingValue zero(const RingSpec& spec);
  static RingValue one(const RingSpec& spec);
  static RingValue from_int(const RingSpec& spec, const mpz_class& z);
  static RingValue from_rational(const RingSpec& spec, const mpq_class& q);
  /// The generator of a polynomial spec (the variable itself). `var` must
  /// name a variable somewhere in the polynomial tower of `spec`.
  static RingValue generator(const RingSpec& spec, const std::string& var);
  static RingValue from_poly(const RingSpec& spec, PolyCoeffs coeffs);

  const RingSpec& spec() const { return spec_; }
  const mpz_class& as_mpz() const { return std::get<mpz_class>(payload_); }
  const mpq_class& as_mpq() const { return std::get<mpq_class>(payload_); }
  const PolyCoeffs& poly_coeffs() const { return std::get<PolyCoeffs>(payload_); }

  std::string to_string() const;

  /// Build a value from a raw payload, canonicalizing it for the spec.
  static RingValue make_canonical(const RingSpec& spec,
                                  std::variant<mpz_class, mpq_class, PolyCoeffs> payload);

 private:
  friend RingValue ring_add(const RingValue&, const RingValue&);
  friend RingValue ring_mul(const RingValue&, const RingValue&);
  friend RingValue ring_neg(const RingValue&);
  RingValue(RingSpec spec, std::variant<mpz_class, mpq_class, PolyCoeffs> payload)
      : spec_(std::move(spec)), payload_(std::move(payload)) {}

  RingSpec spec_;
  std::variant<mpz_class, mpq_class, PolyCoeffs> payload_;
};

RingValue ring_add(const RingValue& a, const RingValue& b);
RingValue ring_sub(const RingValue& a, const RingValue& b);
RingValue ring_mul(const RingValue& a, const RingValue& b);
RingValue ring_neg(const RingValue& a);
bool ring_eq(const RingValue& a, const RingValue& b);
bool ring_is_zero(const RingValue& a);
bool ring_is_unit(const RingValue& a);
/// Multiplicative inverse of a unit; throws NotAUnit otherwise.
RingValue ring_inv(const RingValue& a);
RingValue ring_pow(const RingValue& a, unsigned long e);

/// Divide by the integer n, either by multiplying with 1/n when n is a unit
/// or by exact division; throws NonInvertibleIndex when neither applies.
RingValue ring_div_int(const RingValue& a, const mpz_class& n);

/// Formal derivative with respect to the outermost polynomial variable.
RingValue poly_derivative(const RingValue& p);
/// Degree in the outermost variable; -1 for the zero polynomial.
int poly_degree(const RingValue& p);
RingValue poly_coeff(const RingValue& p, int i);

/// True iff every integer coefficient of p (recursively through polynomial
/// towers) is divisible by m. Defined over Z and polynomial rings over Z.
bool divides_all_coeffs(const RingValue& p, const mpz_class& m);

/// Image of `v` under the evident map onto `target` (embed Z, reduce mod m,
/// map a/b to a*b^{-1}, evaluate polynomial variables listed in `assign`).
/// Throws DenominatorNotInvertible / SpecMismatch when no such map exists.
RingValue ring_map(const RingValue& v, const RingSpec& target,
                   const std::map<std::string, RingValue>& assign = {});

/// Parse a value literal: decimal integer, "a/b", or a variable name from
/// the spec's polynomial tower.
RingValue parse_ring_value(const RingSpec& spec, const std::string& text);

}  // namespace cartierlab

#endif
