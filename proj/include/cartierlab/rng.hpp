#ifndef CARTIERLAB_RNG_HPP
#define CARTIERLAB_RNG_HPP

#include <cstdint>
#include <random>

#include "cartierlab/series.hpp"
#include "cartierlab/witt.hpp"

namespace cartierlab {

/// Deterministic generators for the randomized verification suites.
class ValueGen {
 public:
  explicit ValueGen(uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }
  long uniform(long lo, long hi);  // inclusive

  /// A value with small entries: integers in [-bound, bound], reduced
  /// fractions, residues, or low-degree polynomials.
  RingValue value(const RingSpec& spec, long bound = 9, int poly_degree = 2);
  WittVector witt(const RingSpec& spec, int k, long bound = 9);
  /// Univariate series with zero constant term and unit linear coefficient.
  TruncatedSeries reversible_series(const RingSpec& spec, int trunc, long bound = 9);
  /// Series with zero constant term.
  TruncatedSeries pointed_series(const RingSpec& spec, const std::vector<std::string>& vars,
                                 int trunc, long bound = 9);

 private:
  std::mt19937_64 rng_;
};

}  // namespace cartierlab

#endif
