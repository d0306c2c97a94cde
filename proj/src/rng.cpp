#include "cartierlab/rng.hpp"

namespace cartierlab {

long ValueGen::uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

RingValue ValueGen::value(const RingSpec& spec, long bound, int poly_degree) {
  switch (spec.kind()) {
    case RingSpec::Kind::Integers:
      return RingValue::from_int(spec, uniform(-bound, bound));
    case RingSpec::Kind::Rationals: {
      mpq_class q(uniform(-bound, bound), uniform(1, bound));
      q.canonicalize();
      return RingValue::from_rational(spec, q);
    }
    case RingSpec::Kind::IntegersMod: {
      long m = spec.modulus().get_si();
      return RingValue::from_int(spec, uniform(0, m - 1));
    }
    case RingSpec::Kind::Polynomial: {
      RingValue::PolyCoeffs coeffs;
      int deg = static_cast<int>(uniform(0, poly_degree));
      for (int i = 0; i <= deg; ++i)
        coeffs.push_back(value(spec.base(), bound, std::max(0, poly_degree - 1)));
      return RingValue::from_poly(spec, std::move(coeffs));
    }
  }
  throw Error(ErrorKind::UsageError, "bad spec");
}

WittVector ValueGen::witt(const RingSpec& spec, int k, long bound) {
  std::vector<RingValue> b;
  b.reserve(k);
  for (int i = 0; i < k; ++i) b.push_back(value(spec, bound, 1));
  return WittVector::from_coeffs(spec, std::move(b));
}

TruncatedSeries ValueGen::reversible_series(const RingSpec& spec, int trunc, long bound) {
  TruncatedSeries s(spec, {"x"}, trunc);
  s.set_coeff({1}, RingValue::one(spec));
  for (int i = 2; i <= trunc; ++i) s.set_coeff({i}, value(spec, bound, 1));
  return s;
}

TruncatedSeries ValueGen::pointed_series(const RingSpec& spec,
                                         const std::vector<std::string>& vars, int trunc,
                                         long bound) {
  TruncatedSeries s(spec, vars, trunc);
  // Fill a sparse selection of exponents by random walks over degrees.
  int terms = static_cast<int>(uniform(2, 3 + trunc));
  for (int t = 0; t < terms; ++t) {
    Exponents e(vars.size(), 0);
    int deg = static_cast<int>(uniform(1, std::max(1, trunc)));
    for (int d = 0; d < deg; ++d) e[static_cast<size_t>(uniform(0, vars.size() - 1))] += 1;
    s.set_coeff(e, value(spec, bound, 1));
  }
  return s;
}

}  // namespace cartierlab
